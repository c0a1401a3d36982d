#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <fibperm/cli.hpp>

using namespace fibperm;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void expect_error(const Run& r, const std::string& kind) {
    EXPECT_NE(r.code, 0);
    ASSERT_FALSE(r.err.empty());
    EXPECT_EQ(r.err.find('\n'), r.err.size() - 1) << r.err;
    auto j = json::parse(r.err);
    EXPECT_EQ(j.at("error").get<std::string>(), kind) << r.err;
    EXPECT_TRUE(j.contains("message"));
}

class EnvGuard {
public:
    explicit EnvGuard(const char* value) { setenv(oracle_bound_env, value, 1); }
    ~EnvGuard() { unsetenv(oracle_bound_env); }
};

}  // namespace

TEST(Cli, Count) {
    auto r = run({"count", "--class", "321-3412", "--n", "8"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "610\n");
    EXPECT_EQ(run({"count", "--family", "fountain", "--n", "6"}).out, "89\n");
    EXPECT_EQ(run({"count", "--patterns", "321,21-43", "--n", "6", "--method", "filter"}).out, "89\n");
    EXPECT_EQ(run({"count", "--class", "231-3124", "--n", "5", "--format", "json"}).out, "{\"count\":34,\"n\":5}\n");
}

TEST(Cli, Enumerate) {
    auto r = run({"enumerate", "--class", "321-4123", "--n", "3"});
    EXPECT_EQ(r.out, "123\n132\n213\n231\n312\n");
    r = run({"enumerate", "--family", "dyck", "--n", "2", "--format", "json"});
    EXPECT_EQ(r.out, "[[\"U\",\"U\",\"D\",\"D\"],[\"U\",\"D\",\"U\",\"D\"]]\n");
    r = run({"enumerate", "--family", "polyomino", "--n", "2"});
    EXPECT_EQ(r.out, "0:1,0:1\n0:2\n");
}

TEST(Cli, MapForwardAndInverse) {
    auto r = run({"map", "--family", "polyomino", "--direction", "forward", "--input", "0:3,2:3,3:1,3:2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "981732465\n");
    r = run({"map", "--family", "partition", "--direction", "inverse", "--input", "24158367"});
    EXPECT_EQ(r.out, "1,2,4,5,8/3/6/7\n");
    r = run({"map", "--family", "fountain", "--direction", "inverse", "--input", "245136", "--format", "json"});
    EXPECT_EQ(r.out, "{\"base\":6,\"rows\":[[1,4],[2,2]]}\n");
}

TEST(Cli, MapReadsStdinAndJson) {
    auto r = run({"map", "--family", "dyck", "--input", "-"}, "UUDUUDUDDD\n");
    EXPECT_EQ(r.out, "24513\n");
    r = run({"map", "--family", "polyomino", "--input", "-"},
            R"([{"bottom":0,"height":3},{"bottom":2,"height":3},{"bottom":3,"height":1},{"bottom":3,"height":2}])");
    EXPECT_EQ(r.out, "981732465\n");
    r = run({"map", "--family", "partition", "--direction", "inverse", "--input", "-"}, "[2,4,1,5,8,3,6,7]");
    EXPECT_EQ(r.out, "1,2,4,5,8/3/6/7\n");
}

TEST(Cli, Triangle) {
    auto r = run({"triangle", "--which", "321-21_43", "--n", "8", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, read_file(std::filesystem::path(FIBPERM_FIXTURE_DIR) / "table2.csv"));
    for (const char* method : {"gf", "enumerate"})
        EXPECT_EQ(run({"triangle", "--which", "321-21_43", "--n", "8", "--format", "csv", "--method", method}).out, r.out);
    EXPECT_EQ(run({"triangle", "--which", "321-3412", "--n", "3"}).out, "1\n1 1\n2 2 1\n");
}

TEST(Cli, Series) {
    EXPECT_EQ(run({"series", "--order", "8"}).out, "0 1 2 5 13 34 89 233 610\n");
    EXPECT_EQ(run({"series", "--order", "3", "--format", "json"}).out, "[0,1,2,5]\n");
}

TEST(Cli, Deterministic) {
    std::vector<std::string> args = {"enumerate", "--family", "fountain", "--n", "5", "--format", "json"};
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
}

TEST(Cli, Errors) {
    expect_error(run({"map", "--family", "dyck", "--direction", "inverse", "--input", "4123"}), "not_in_class");
    expect_error(run({"map", "--family", "polyomino", "--input", "0:1,2:1"}), "detached_column");
    expect_error(run({"map", "--family", "dyck", "--input", "UDDU"}), "negative_prefix");
    expect_error(run({"map", "--family", "fountain", "--input", "{\"base\":"}), "invalid_input");
    expect_error(run({"count", "--class", "321-3412", "--n", "15"}), "bound_exceeded");
    expect_error(run({"count", "--class", "132-321", "--n", "3"}), "invalid_input");
    expect_error(run({"series", "--order", "61"}), "bound_exceeded");
    expect_error(run({"verify", "--max-n", "13"}), "bound_exceeded");
    expect_error(run({"count", "--n", "3"}), "invalid_input");
}

TEST(Cli, UsageErrors) {
    auto r = run({});
    EXPECT_EQ(r.code, 2);
    expect_error(r, "usage");
    r = run({"count", "--class", "321-3412"});
    EXPECT_EQ(r.code, 2);
    expect_error(r, "usage");
    expect_error(run({"count", "--class", "321-3412", "--family", "dyck", "--n", "3"}), "usage");
    expect_error(run({"series", "--order", "3", "--format", "xml"}), "usage");
    expect_error(run({"frobnicate"}), "usage");
}

TEST(Cli, OracleBoundFromEnvironment) {
    {
        EnvGuard env("5");
        expect_error(run({"count", "--class", "321-3412", "--n", "6", "--method", "filter"}), "bound_exceeded");
        EXPECT_EQ(run({"count", "--class", "321-3412", "--n", "6"}).out, "89\n");
    }
    {
        EnvGuard env("abc");
        expect_error(run({"series", "--order", "2"}), "invalid_input");
    }
    EXPECT_EQ(run({"count", "--class", "321-3412", "--n", "6", "--method", "filter"}).out, "89\n");
}

TEST(Cli, VerifyPasses) {
    auto r = run({"verify", "--max-n", "6"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("PASS tables.table3"), std::string::npos);
    EXPECT_EQ(run({"verify", "--max-n", "1"}).code, 0);
}

TEST(Cli, VerifyFlagsCorruptFixture) {
    auto dir = std::filesystem::temp_directory_path() / "fibperm_corrupt_fixture";
    std::filesystem::create_directories(dir);
    for (const char* name : {"table1.csv", "table2.csv", "table3.csv"})
        std::filesystem::copy_file(std::filesystem::path(FIBPERM_FIXTURE_DIR) / name, dir / name,
                                   std::filesystem::copy_options::overwrite_existing);
    {
        std::ofstream bad(dir / "table2.csv");
        bad << "1\n1,1\n1,2,3\n";
    }
    auto r = run({"verify", "--max-n", "4", "--fixtures", dir.string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("FAIL tables.table2"), std::string::npos) << r.out;
    expect_error(r, "check_failed");
    EXPECT_NE(r.err.find("tables.table2"), std::string::npos);
    std::filesystem::remove_all(dir);
}
