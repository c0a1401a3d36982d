// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <fibperm/bijections.hpp>
#include <fibperm/gfseries.hpp>
#include <fibperm/verify.hpp>

using namespace fibperm;

namespace {

using Rows = std::vector<std::vector<coeff_t>>;

const std::vector<std::size_t> odd_fib = {1, 2, 5, 13, 34, 89, 233, 610, 1597, 4181, 10946, 28657};

const Rows table1 = {{1},
                     {1, 1},
                     {2, 2, 1},
                     {5, 4, 3, 1},
                     {13, 10, 6, 4, 1},
                     {34, 26, 15, 8, 5, 1},
                     {89, 68, 39, 20, 10, 6, 1},
                     {233, 178, 102, 52, 25, 12, 7, 1}};

const Rows table2 = {{1},
                     {1, 1},
                     {1, 2, 2},
                     {1, 3, 4, 5},
                     {1, 4, 7, 9, 13},
                     {1, 5, 11, 16, 22, 34},
                     {1, 6, 16, 27, 38, 56, 89},
                     {1, 7, 22, 43, 65, 94, 145, 233}};

const Rows table3 = {{1},
                     {1, 1},
                     {2, 2, 1},
                     {5, 5, 2, 1},
                     {13, 13, 5, 2, 1},
                     {34, 34, 13, 5, 2, 1},
                     {89, 89, 34, 13, 5, 2, 1},
                     {233, 233, 89, 34, 13, 5, 2, 1}};

// Area-4 polyominoes (bottom:height per column) and their permutations.
const std::vector<std::pair<std::string, std::string>> area4 = {
    {"0:1,0:1,0:1,0:1", "1234"}, {"0:1,0:1,0:2", "1243"}, {"0:1,0:2,0:1", "1324"}, {"0:1,0:2,1:1", "1423"},
    {"0:1,0:3", "1432"},         {"0:2,0:1,0:1", "2134"}, {"0:2,0:2", "2143"},     {"0:3,0:1", "3214"},
    {"0:2,1:1,1:1", "4123"},     {"0:2,1:2", "4132"},     {"0:3,1:1", "4213"},     {"0:3,2:1", "4312"},
    {"0:4", "4321"},
};

const Rows& table_for(PermClass c) {
    switch (c) {
        case PermClass::c321_2143v: return table2;
        case PermClass::c321_3412: return table3;
        default: return table1;
    }
}

std::string n_is(int n) { return "n=" + std::to_string(n); }

// Each check returns an empty string on success, otherwise the first discrepancy.
std::string counts() {
    for (auto c : all_classes)
        for (int n = 1; n <= 9; ++n)
            if (enumerate_class(c, n).size() != odd_fib[static_cast<std::size_t>(n - 1)])
                return std::string(class_name(c)) + " " + n_is(n);
    return {};
}

std::string object_counts() {
    const std::pair<Family, int> bounds[] = {
        {Family::dyck, 12}, {Family::fountain, 12}, {Family::partition, 10}, {Family::polyomino, 10}};
    for (auto [f, top] : bounds)
        for (int n = 1; n <= top; ++n)
            if (enumerate_family(f, n).size() != odd_fib[static_cast<std::size_t>(n - 1)])
                return std::string(family_name(f)) + " " + n_is(n);
    return {};
}

std::string tables() {
    if (triangle_321_4123(8).rows != table1) return "table 1";
    if (triangle_321_2143(8).rows != table2) return "table 2";
    if (triangle_321_3412(8).rows != table3) return "table 3";
    if (triangle_231_3124(12) != triangle_321_4123(12)) return "231-3124 differs from 321-4123";
    for (auto c : all_classes)
        if (enumerated_triangle(c, 8).rows != table_for(c)) return std::string(class_name(c)) + " enumeration";
    return {};
}

std::string generating_functions() {
    auto s = expand_series(gf_odd_fibonacci(), 12);
    for (int n = 1; n <= 12; ++n)
        if (static_cast<std::size_t>(s[n]) != odd_fib[static_cast<std::size_t>(n - 1)]) return "odd Fibonacci " + n_is(n);
    for (auto c : all_classes) {
        auto gf = class_gf(c);
        if (expand_triangle(gf, 8) != enumerated_triangle(c, 8)) return std::string(class_name(c)) + " vs enumeration";
        if (expand_triangle(gf, 12) != rule_triangle(c, 12)) return std::string(class_name(c)) + " vs recurrence";
    }
    return {};
}

std::string bijections() {
    for (auto f : all_families)
        for (int n = 1; n <= 8; ++n) {
            auto rep = verify_family(f, n);
            if (!rep.forward_ok || !rep.inverse_ok || !rep.mismatches.empty())
                return std::string(family_name(f)) + " " + n_is(n) + ": " + rep.mismatches.front();
        }
    auto polys = enumerate_family(Family::polyomino, 4);
    if (polys.size() != area4.size()) return "area-4 polyomino count";
    for (const auto& [poly, perm] : area4) {
        if (std::find(polys.begin(), polys.end(), poly) == polys.end()) return poly + " not enumerated";
        if (map_forward(Family::polyomino, poly) != perm) return poly + " -> " + map_forward(Family::polyomino, poly);
        if (map_inverse(Family::polyomino, perm) != poly) return perm + " -> " + map_inverse(Family::polyomino, perm);
    }
    return {};
}

std::string structure() {
    const std::vector<Pattern> p321{parse_pattern("321")};
    const Pattern p4123 = parse_pattern("4123");
    for (int n = 1; n <= 8; ++n)
        for (const auto& s : avoiders_pruned(n, p321))
            if ((stats(perm_to_dyck(s)).height <= 3) != !contains(s, p4123)) return "height criterion at " + to_string(s);
    for (int n = 1; n <= 9; ++n)
        for (const auto& s : enumerate_class(PermClass::c231_3124, n)) {
            if (s(1) > 1 && s(1) < n && s(2) != s(1) - 1) return "inflation at " + to_string(s);
            for (const auto& run : descending_runs(s).runs) {
                int blocks = 1;
                for (std::size_t i = 1; i < run.size(); ++i) blocks += run[i - 1] != run[i] + 1;
                if (blocks > 2) return "descending run at " + to_string(s);
            }
        }
    for (int n = 1; n <= 9; ++n)
        for (const auto& p : enumerate_ncn(n)) {
            if (!is_indecomposable(p) || n == 1) continue;
            int big = 0;
            bool ends = false;
            for (const auto& b : p.blocks())
                if (b.size() > 1) {
                    ++big;
                    ends = b.front() == 1 && b.back() == n;
                }
            if (big != 1 || !ends) return "indecomposable partition " + to_string(p);
        }
    for (int n = 2; n <= 9; ++n)
        for (const auto& s : enumerate_class(PermClass::c321_2143v, n))
            if (s(1) != 1 && s(n) != n && position_of(phi(s), n - 1) != position_of(s, n))
                return "phi at " + to_string(s);
    return {};
}

std::string statistics() {
    for (int n = 1; n <= 8; ++n) {
        const auto& t1 = table1[static_cast<std::size_t>(n - 1)];
        const auto& t3 = table3[static_cast<std::size_t>(n - 1)];
        if (histogram(enumerate_dcc(n), n, first_column_height) != t1) return "first column " + n_is(n);
        if (histogram(enumerate_ncn(n), n, m_statistic) != t3) return "m statistic " + n_is(n);
        auto paths = enumerate_bounded(n, 3);
        auto ud = std::count_if(paths.begin(), paths.end(), [](const DyckPath& d) {
            return d.steps()[0] == Step::up && d.steps()[1] == Step::down;
        });
        if (ud != t1[0]) return "UD-initial paths " + n_is(n);
    }
    return {};
}

std::string generators() {
    for (auto c : all_classes) {
        auto pats = class_patterns(c);
        for (int n = 0; n <= 8; ++n)
            if (avoiders_pruned(n, pats) != avoiders_filter(n, pats, default_oracle_bound))
                return std::string(class_name(c)) + " " + n_is(n);
    }
    return {};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
        {"1 class counts are F(2n-1), n<=9", counts},
        {"2 object counts are F(2n-1)", object_counts},
        {"3 positional triangles match the reference tables", tables},
        {"4 generating functions match statistics and recurrences", generating_functions},
        {"5 bijections round-trip, area-4 pairings", bijections},
        {"6 structural properties", structure},
        {"7 statistic correspondences", statistics},
        {"8 pruned and filtered generators agree", generators},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string problem;
        try {
            problem = check();
        } catch (const std::exception& e) {
            problem = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, " (%.2fs)", secs);
        std::cout << (problem.empty() ? "PASS " : "FAIL ") << name << timing;
        if (!problem.empty()) std::cout << ": " << problem;
        std::cout << '\n';
        failed += !problem.empty();
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
