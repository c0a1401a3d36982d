#pragma once

// Command-line front end. `run_cli` takes the arguments after the program
// name and writes to the supplied streams so it can be driven from tests.

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bijections.hpp"
#include "gfseries.hpp"
#include "json_io.hpp"
#include "verify.hpp"

namespace fibperm {

inline constexpr int cli_max_n = 14;
inline constexpr int cli_max_order = 30;
inline constexpr int cli_max_verify_n = 12;
inline constexpr const char* oracle_bound_env = "FIBPERM_ORACLE_BOUND";

namespace detail {

inline int oracle_bound_from_env() {
    const char* raw = std::getenv(oracle_bound_env);
    if (!raw || !*raw) return default_oracle_bound;
    try {
        std::size_t used = 0;
        int v = std::stoi(raw, &used);
        if (used == std::string(raw).size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::invalid_input, std::string(oracle_bound_env) + " must be a nonnegative integer");
}

inline void check_bound(int n, int lo, int hi, const std::string& what) {
    if (n < lo) throw Error(ErrorKind::invalid_input, what + " must be >= " + std::to_string(lo));
    if (n > hi) throw Error(ErrorKind::bound_exceeded, what + " = " + std::to_string(n) + " exceeds " + std::to_string(hi));
}

inline std::vector<Pattern> parse_pattern_list(const std::string& text) {
    std::vector<Pattern> pats;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) pats.push_back(parse_pattern(item));
    if (pats.empty()) throw Error(ErrorKind::invalid_input, "empty pattern list");
    return pats;
}

// JSON object text is converted to the family's plain text form.
inline std::string object_text(Family f, const std::string& raw) {
    auto first = raw.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || (raw[first] != '[' && raw[first] != '{')) {
        auto last = raw.find_last_not_of(" \t\r\n");
        return first == std::string::npos ? std::string{} : raw.substr(first, last - first + 1);
    }
    json j;
    try {
        j = json::parse(raw);
        switch (f) {
            case Family::dyck: return to_string(j.get<DyckPath>());
            case Family::fountain: return to_string(j.get<BlockFountain>());
            case Family::partition: return to_string(j.get<SetPartition>());
            case Family::polyomino: return to_string(j.get<DccPolyomino>());
        }
    } catch (const json::exception& e) {
        throw Error(ErrorKind::invalid_input, std::string("bad JSON input: ") + e.what());
    }
    return {};
}

inline std::string perm_text(const std::string& raw) {
    auto first = raw.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && raw[first] == '[') {
        try {
            return to_string(json::parse(raw).get<Permutation>());
        } catch (const json::exception& e) {
            throw Error(ErrorKind::invalid_input, std::string("bad JSON input: ") + e.what());
        }
    }
    auto last = raw.find_last_not_of(" \t\r\n");
    return first == std::string::npos ? std::string{} : raw.substr(first, last - first + 1);
}

inline json object_json(Family f, const std::string& text) {
    switch (f) {
        case Family::dyck: return parse_dyck(text);
        case Family::fountain: return parse_fountain(text);
        case Family::partition: return parse_partition(text);
        case Family::polyomino: return parse_polyomino(text);
    }
    return {};
}

inline void error_line(std::ostream& err, std::string_view kind, const std::string& message) {
    err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Odd-indexed Fibonacci classes: pattern avoidance, bijections, triangles"};
    app.require_subcommand(1);

    std::string format = "plain";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "plain, csv or json")
            ->check(CLI::IsMember({"plain", "csv", "json"}));
    };

    std::string class_sel, patterns_sel, family_sel, method = "pruned";
    int n = 0;
    auto add_selector = [&](CLI::App* sub) {
        auto* c = sub->add_option("--class", class_sel, "321-4123, 321-21_43, 321-3412 or 231-3124");
        auto* p = sub->add_option("--patterns", patterns_sel, "comma-separated patterns, e.g. 321,21-43");
        auto* f = sub->add_option("--family", family_sel, "dyck, fountain, partition or polyomino");
        c->excludes(p)->excludes(f);
        p->excludes(f);
        sub->add_option("--n", n, "size")->required();
        sub->add_option("--method", method, "pruned or filter (permutation classes only)")
            ->check(CLI::IsMember({"pruned", "filter"}));
        add_format(sub);
    };

    auto* count = app.add_subcommand("count", "Count a permutation class or object family");
    add_selector(count);
    auto* enumerate = app.add_subcommand("enumerate", "List a permutation class or object family");
    add_selector(enumerate);

    std::string direction = "forward", input;
    auto* map = app.add_subcommand("map", "Apply a bijection (forward: object to permutation)");
    map->add_option("--family", family_sel, "dyck, fountain, partition or polyomino")->required();
    map->add_option("--direction", direction, "forward or inverse")->check(CLI::IsMember({"forward", "inverse"}));
    map->add_option("--input", input, "object or permutation text, JSON accepted; '-' reads stdin")->required();
    add_format(map);

    std::string which, tri_method = "rule";
    auto* triangle = app.add_subcommand("triangle", "Positional triangle of a class");
    triangle->add_option("--which", which, "class name")->required();
    triangle->add_option("--n", n, "number of rows")->required();
    triangle->add_option("--method", tri_method, "rule, gf or enumerate")
        ->check(CLI::IsMember({"rule", "gf", "enumerate"}));
    add_format(triangle);

    int order = 0;
    auto* series = app.add_subcommand("series", "Expand (x-x^2)/(1-3x+x^2)");
    series->add_option("--order", order, "highest power of x")->required();
    add_format(series);

    int max_n = 8;
    std::string fixtures = FIBPERM_FIXTURE_DIR;
    auto* verify = app.add_subcommand("verify", "Run every check; nonzero exit on failure");
    verify->add_option("--max-n", max_n, "largest size to check");
    verify->add_option("--fixtures", fixtures, "directory holding table1.csv .. table3.csv");
    add_format(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        detail::error_line(err, "usage", e.what());
        return 2;
    }

    try {
        const int oracle_bound = detail::oracle_bound_from_env();

        if (count->parsed() || enumerate->parsed()) {
            detail::check_bound(n, 0, cli_max_n, "n");
            std::vector<std::string> items;
            if (!family_sel.empty()) {
                if (n < 1) throw Error(ErrorKind::invalid_input, "family size must be >= 1");
                items = enumerate_family(parse_family(family_sel), n);
            } else {
                std::vector<Pattern> pats;
                if (!class_sel.empty()) pats = class_patterns(parse_class(class_sel));
                else if (!patterns_sel.empty()) pats = detail::parse_pattern_list(patterns_sel);
                else throw Error(ErrorKind::invalid_input, "one of --class, --patterns or --family is required");
                auto perms = method == "filter" ? avoiders_filter(n, pats, oracle_bound) : avoiders_pruned(n, pats);
                for (const auto& p : perms) items.push_back(to_string(p));
            }
            if (count->parsed()) {
                if (format == "json") out << json{{"n", n}, {"count", items.size()}}.dump() << '\n';
                else out << items.size() << '\n';
            } else if (format == "json") {
                json arr = json::array();
                for (const auto& s : items) {
                    if (family_sel.empty()) arr.push_back(parse_permutation(s));
                    else arr.push_back(detail::object_json(parse_family(family_sel), s));
                }
                out << arr.dump() << '\n';
            } else {
                for (const auto& s : items) out << s << '\n';
            }
            return 0;
        }

        if (map->parsed()) {
            auto fam = parse_family(family_sel);
            std::string raw = input;
            if (input == "-") raw.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
            std::string result = direction == "forward" ? map_forward(fam, detail::object_text(fam, raw))
                                                        : map_inverse(fam, detail::perm_text(raw));
            if (format == "json") {
                out << (direction == "forward" ? json(parse_permutation(result)) : detail::object_json(fam, result)).dump()
                    << '\n';
            } else {
                out << result << '\n';
            }
            return 0;
        }

        if (triangle->parsed()) {
            auto c = parse_class(which);
            detail::check_bound(n, 1, tri_method == "enumerate" ? cli_max_n : cli_max_order, "n");
            BivariateTriangle tri = tri_method == "gf"          ? expand_triangle(class_gf(c), n)
                                    : tri_method == "enumerate" ? enumerated_triangle(c, n)
                                                                : rule_triangle(c, n);
            if (format == "json") {
                out << json(tri).dump() << '\n';
            } else if (format == "csv") {
                out << to_csv(tri);
            } else {
                for (const auto& row : tri.rows) {
                    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
                    out << '\n';
                }
            }
            return 0;
        }

        if (series->parsed()) {
            detail::check_bound(order, 0, cli_max_order * 2, "order");
            auto s = expand_series(gf_odd_fibonacci(), order);
            if (format == "json") {
                out << json(s).dump() << '\n';
            } else {
                const char* sep = format == "csv" ? "," : " ";
                for (int i = 0; i <= s.order(); ++i) out << (i ? sep : "") << s[i];
                out << '\n';
            }
            return 0;
        }

        if (verify->parsed()) {
            detail::check_bound(max_n, 1, cli_max_verify_n, "max-n");
            auto results = run_checks({max_n, fixtures, oracle_bound});
            bool ok = true;
            json arr = json::array();
            for (const auto& r : results) {
                ok = ok && r.passed;
                if (format == "json") {
                    arr.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
                } else if (format == "csv") {
                    out << r.name << ',' << (r.passed ? "pass" : "fail") << '\n';
                } else {
                    out << (r.passed ? "PASS " : "FAIL ") << r.name;
                    if (!r.passed) out << ": " << r.detail;
                    out << '\n';
                }
            }
            if (format == "json") out << arr.dump() << '\n';
            if (!ok) {
                for (const auto& r : results)
                    if (!r.passed) {
                        detail::error_line(err, "check_failed", r.name + ": " + r.detail);
                        break;
                    }
                return 1;
            }
            return 0;
        }
    } catch (const Error& e) {
        detail::error_line(err, to_string(e.kind()), e.what());
        return 1;
    } catch (const std::exception& e) {
        detail::error_line(err, "internal", e.what());
        return 1;
    }
    return 0;
}

}  // namespace fibperm
