#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bijections.hpp"
#include "gfseries.hpp"

namespace fibperm {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    int max_n = 8;
    std::filesystem::path fixture_dir;
    int oracle_bound = default_oracle_bound;
};

/// Histogram h[k-1] = #{x : stat(x) = k} for k in [1, n].
template <class Range, class Stat>
std::vector<coeff_t> histogram(const Range& items, int n, Stat stat) {
    std::vector<coeff_t> h(static_cast<std::size_t>(n), 0);
    for (const auto& x : items) {
        int k = stat(x);
        if (k < 1 || k > n) throw Error(ErrorKind::invalid_input, "statistic out of range");
        ++h[static_cast<std::size_t>(k - 1)];
    }
    return h;
}

/// Row-by-row triangle of a positional statistic over a permutation class.
inline BivariateTriangle enumerated_triangle(PermClass c, int N) {
    BivariateTriangle tri;
    for (int n = 1; n <= N; ++n) {
        auto perms = enumerate_class(c, n);
        auto stat = [&](const Permutation& p) {
            return c == PermClass::c321_2143v ? position_of(p, n) : position_of(p, 1);
        };
        tri.rows.push_back(histogram(perms, n, stat));
    }
    return tri;
}

inline BivariateTriangle rule_triangle(PermClass c, int N) {
    switch (c) {
        case PermClass::c321_4123: return triangle_321_4123(N);
        case PermClass::c321_2143v: return triangle_321_2143(N);
        case PermClass::c321_3412: return triangle_321_3412(N);
        case PermClass::c231_3124: return triangle_231_3124(N);
    }
    return {};
}

inline RationalGF class_gf(PermClass c) {
    switch (c) {
        case PermClass::c321_4123: return gf_position_of_one_321_4123();
        case PermClass::c321_2143v: return gf_position_of_max_321_2143();
        case PermClass::c321_3412: return gf_position_of_one_321_3412();
        case PermClass::c231_3124: return gf_position_of_one_231_3124();
    }
    return {};
}

namespace detail {

inline BivariateTriangle truncate(const BivariateTriangle& t, int N) {
    BivariateTriangle out;
    for (int n = 1; n <= std::min(N, t.order()); ++n) out.rows.push_back(t.rows[static_cast<std::size_t>(n - 1)]);
    return out;
}

inline std::string first_difference(const BivariateTriangle& got, const BivariateTriangle& want) {
    if (got.order() != want.order())
        return "row count " + std::to_string(got.order()) + " vs " + std::to_string(want.order());
    for (int n = 1; n <= got.order(); ++n)
        for (int k = 1; k <= n; ++k)
            if (got.at(n, k) != want.at(n, k))
                return "entry (" + std::to_string(n) + "," + std::to_string(k) + "): " +
                       std::to_string(got.at(n, k)) + " vs " + std::to_string(want.at(n, k));
    return {};
}

}  // namespace detail

/// Polyomino / permutation pairs for area 4 in the standard labelling.
inline const std::vector<std::pair<std::string, std::string>>& dcc_area4_pairs() {
    static const std::vector<std::pair<std::string, std::string>> pairs = {
        {"0:1,0:1,0:1,0:1", "1234"}, {"0:1,0:1,0:2", "1243"}, {"0:1,0:2,0:1", "1324"},
        {"0:1,0:2,1:1", "1423"},     {"0:1,0:3", "1432"},     {"0:2,0:1,0:1", "2134"},
        {"0:2,0:2", "2143"},         {"0:3,0:1", "3214"},     {"0:2,1:1,1:1", "4123"},
        {"0:2,1:2", "4132"},         {"0:3,1:1", "4213"},     {"0:3,2:1", "4312"},
        {"0:4", "4321"},
    };
    return pairs;
}

/**
 * Runs the full battery of counting, table, generating-function, bijection,
 * structure and generator-equivalence checks with every size clipped to
 * max_n. Table fixtures are read from `fixture_dir` as table{1,2,3}.csv.
 */
inline std::vector<CheckResult> run_checks(const VerifyOptions& opt) {
    std::vector<CheckResult> results;
    auto run = [&](std::string name, const std::function<std::string()>& body) {
        CheckResult r{std::move(name), false, {}};
        try {
            r.detail = body();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    };
    auto upto = [&](int cap) { return std::min(opt.max_n, cap); };

    for (auto c : all_classes)
        run("counts." + std::string(class_name(c)), [&]() -> std::string {
            for (int n = 1; n <= upto(9); ++n) {
                auto got = static_cast<coeff_t>(enumerate_class(c, n).size());
                if (got != fib_odd(n)) return "n=" + std::to_string(n) + ": " + std::to_string(got);
            }
            return {};
        });

    const std::pair<Family, int> object_caps[] = {
        {Family::dyck, 12}, {Family::fountain, 12}, {Family::partition, 10}, {Family::polyomino, 10}};
    for (auto [f, cap] : object_caps)
        run("objects." + std::string(family_name(f)), [&, f = f, cap = cap]() -> std::string {
            for (int n = 1; n <= upto(cap); ++n) {
                auto got = static_cast<coeff_t>(enumerate_family(f, n).size());
                if (got != fib_odd(n)) return "n=" + std::to_string(n) + ": " + std::to_string(got);
            }
            return {};
        });

    const std::pair<const char*, PermClass> tables[] = {{"table1", PermClass::c321_4123},
                                                        {"table2", PermClass::c321_2143v},
                                                        {"table3", PermClass::c321_3412}};
    for (auto [file, c] : tables)
        run(std::string("tables.") + file, [&, file = file, c = c]() -> std::string {
            auto path = opt.fixture_dir / (std::string(file) + ".csv");
            std::ifstream in(path);
            if (!in) return "cannot read " + path.string();
            std::stringstream buf;
            buf << in.rdbuf();
            auto fixture = detail::truncate(parse_triangle_csv(buf.str()), opt.max_n);
            return detail::first_difference(rule_triangle(c, fixture.order()), fixture);
        });
    run("tables.table1_shared", [&]() -> std::string {
        return detail::first_difference(triangle_231_3124(upto(12)), triangle_321_4123(upto(12)));
    });

    run("gf.odd_fibonacci", [&]() -> std::string {
        auto s = expand_series(gf_odd_fibonacci(), upto(30));
        if (s[0] != 0) return "constant term nonzero";
        for (int n = 1; n <= s.order(); ++n)
            if (s[n] != fib_odd(n)) return "coefficient " + std::to_string(n);
        if (s.order() >= 3 && !check_recurrence(s, {3, -1}, 3)) return "recurrence fails";
        return {};
    });
    for (auto c : all_classes) {
        run("gf." + std::string(class_name(c)) + ".rule", [&, c]() -> std::string {
            return detail::first_difference(expand_triangle(class_gf(c), upto(12)), rule_triangle(c, upto(12)));
        });
        run("gf." + std::string(class_name(c)) + ".enumerated", [&, c]() -> std::string {
            return detail::first_difference(expand_triangle(class_gf(c), upto(8)), enumerated_triangle(c, upto(8)));
        });
    }

    for (auto f : all_families)
        run("bijection." + std::string(family_name(f)), [&, f]() -> std::string {
            for (int n = 1; n <= upto(8); ++n) {
                auto rep = verify_family(f, n);
                if (!rep.forward_ok || !rep.inverse_ok)
                    return "n=" + std::to_string(n) + ": " +
                           (rep.mismatches.empty() ? std::string("failed") : rep.mismatches.front());
            }
            return {};
        });
    if (opt.max_n >= 4)
        run("bijection.polyomino_area4_pairs", [&]() -> std::string {
            for (const auto& [poly, perm] : dcc_area4_pairs())
                if (map_forward(Family::polyomino, poly) != perm) return poly + " does not map to " + perm;
            return {};
        });

    run("structure.height_criterion", [&]() -> std::string {
        static const std::vector<Pattern> p321{parse_pattern("321")};
        static const Pattern p4123 = parse_pattern("4123");
        for (int n = 1; n <= upto(8); ++n)
            for (const auto& s : avoiders_pruned(n, p321))
                if ((stats(perm_to_dyck(s)).height <= 3) == contains(s, p4123)) return to_string(s);
        return {};
    });
    run("structure.inflation", [&]() -> std::string {
        for (int n = 1; n <= upto(9); ++n)
            for (const auto& s : enumerate_class(PermClass::c231_3124, n))
                if (s(1) > 1 && s(1) < n && s(2) != s(1) - 1) return to_string(s);
        return {};
    });
    run("structure.run_blocks", [&]() -> std::string {
        for (int n = 1; n <= upto(9); ++n)
            for (const auto& s : enumerate_class(PermClass::c231_3124, n))
                for (const auto& run : descending_runs(s).runs) {
                    int blocks = 1;
                    for (std::size_t i = 1; i < run.size(); ++i) blocks += run[i - 1] != run[i] + 1;
                    if (blocks > 2) return to_string(s);
                }
        return {};
    });
    run("structure.indecomposable_ncn", [&]() -> std::string {
        for (int n = 2; n <= upto(9); ++n)
            for (const auto& p : enumerate_ncn(n)) {
                if (!is_indecomposable(p)) continue;
                int big = 0;
                bool joins = false;
                for (const auto& b : p.blocks())
                    if (b.size() > 1) {
                        ++big;
                        joins = b.front() == 1 && b.back() == n;
                    }
                if (big != 1 || !joins) return to_string(p);
            }
        return {};
    });
    run("structure.phi_position", [&]() -> std::string {
        for (int n = 2; n <= upto(9); ++n) {
            std::vector<Permutation> images;
            for (const auto& s : enumerate_class(PermClass::c321_2143v, n)) {
                if (s(1) == 1 || s(n) == n) continue;
                auto t = phi(s);
                if (position_of(t, n - 1) != position_of(s, n)) return to_string(s);
                if (phi_inverse(t) != s) return "phi inverse fails at " + to_string(s);
                images.push_back(t);
            }
            std::sort(images.begin(), images.end());
            if (images != enumerate_class(PermClass::c321_2143v, n - 1))
                return "phi is not onto at n=" + std::to_string(n);
        }
        return {};
    });

    run("statistics.first_column", [&]() -> std::string {
        auto want = triangle_321_4123(upto(8));
        for (int n = 1; n <= upto(8); ++n)
            if (histogram(enumerate_dcc(n), n, first_column_height) != want.rows[static_cast<std::size_t>(n - 1)])
                return "n=" + std::to_string(n);
        return {};
    });
    run("statistics.m_statistic", [&]() -> std::string {
        auto want = triangle_321_3412(upto(8));
        for (int n = 1; n <= upto(8); ++n)
            if (histogram(enumerate_ncn(n), n, m_statistic) != want.rows[static_cast<std::size_t>(n - 1)])
                return "n=" + std::to_string(n);
        return {};
    });
    run("statistics.ud_initial", [&]() -> std::string {
        auto want = triangle_321_4123(upto(8));
        for (int n = 1; n <= upto(8); ++n) {
            auto paths = enumerate_bounded(n, 3);
            auto ud = std::count_if(paths.begin(), paths.end(), [](const DyckPath& d) {
                return d.steps()[0] == Step::up && d.steps()[1] == Step::down;
            });
            if (ud != want.at(n, 1)) return "n=" + std::to_string(n);
            if (histogram(paths, n, descent_column) != want.rows[static_cast<std::size_t>(n - 1)])
                return "descent columns, n=" + std::to_string(n);
        }
        return {};
    });

    for (auto c : all_classes)
        run("generators." + std::string(class_name(c)), [&, c]() -> std::string {
            auto pats = class_patterns(c);
            for (int n = 0; n <= std::min(upto(8), opt.oracle_bound); ++n)
                if (avoiders_filter(n, pats, opt.oracle_bound) != avoiders_pruned(n, pats))
                    return "n=" + std::to_string(n);
            return {};
        });

    return results;
}

}  // namespace fibperm
