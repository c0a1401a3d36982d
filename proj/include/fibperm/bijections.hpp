#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dyck.hpp"
#include "error.hpp"
#include "fountain.hpp"
#include "partition.hpp"
#include "pattern.hpp"
#include "permutation.hpp"
#include "polyomino.hpp"

namespace fibperm {

namespace detail {

inline void require_class(const Permutation& p, PermClass c) {
    if (!in_class(p, c))
        throw Error(ErrorKind::not_in_class, to_string(p) + " is not in S_n(" + std::string(class_name(c)) + ")");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 321-avoiders and Dyck paths
// ---------------------------------------------------------------------------

/**
 * Maxima-to-path map on 321-avoiders: v_1 up-steps, then for each later
 * maximum v_j - v_{j-1} up-steps, each up-run followed by i_{j+1} - i_j
 * down-steps (i_{k+1} = n + 1). The j-th peak has altitude v_j - i_j + 1.
 */
inline DyckPath perm_to_dyck(const Permutation& sigma) {
    static const Pattern p321 = parse_pattern("321");
    if (contains(sigma, p321))
        throw Error(ErrorKind::not_in_class, to_string(sigma) + " contains 321");
    std::vector<Step> steps;
    if (sigma.empty()) return DyckPath{};
    auto m = ltr_maxima(sigma);
    int prev_value = 0;
    for (std::size_t j = 0; j < m.positions.size(); ++j) {
        int next_pos = j + 1 < m.positions.size() ? m.positions[j + 1] : sigma.size() + 1;
        steps.insert(steps.end(), static_cast<std::size_t>(m.values[j] - prev_value), Step::up);
        steps.insert(steps.end(), static_cast<std::size_t>(next_pos - m.positions[j]), Step::down);
        prev_value = m.values[j];
    }
    return DyckPath(std::move(steps));
}

inline Permutation dyck_to_perm(const DyckPath& d) {
    LtrMaxima m;
    m.n = d.semilength();
    const auto& s = d.steps();
    int value = 0;
    int position = 1;
    std::size_t i = 0;
    while (i < s.size()) {
        int ups = 0, downs = 0;
        while (i < s.size() && s[i] == Step::up) { ++ups; ++i; }
        while (i < s.size() && s[i] == Step::down) { ++downs; ++i; }
        value += ups;
        m.positions.push_back(position);
        m.values.push_back(value);
        position += downs;
    }
    return from_ltr_maxima(m);
}

// ---------------------------------------------------------------------------
// S_n(321, 21-43) and block fountains
// ---------------------------------------------------------------------------

/// Each peak covering base coins [i, j] yields the maximum sigma(i) = j
/// (j = i for an uncovered base coin); the rest is filled in increasing order.
inline Permutation fountain_to_perm(const BlockFountain& f) {
    LtrMaxima m;
    m.n = f.base();
    for (const auto& c : peaks(f)) {
        m.positions.push_back(c.left);
        m.values.push_back(c.right());
    }
    return from_ltr_maxima(m);
}

/// Union of the triangular stacks over [i_j, sigma(i_j)] for every maximum.
inline BlockFountain perm_to_fountain(const Permutation& sigma) {
    detail::require_class(sigma, PermClass::c321_2143v);
    if (sigma.empty()) throw Error(ErrorKind::invalid_input, "fountain base must be nonempty");
    auto m = ltr_maxima(sigma);
    CoinSet cs;
    for (std::size_t j = 0; j < m.positions.size(); ++j)
        cs.merge(triangular_stack(m.positions[j], m.values[j]));
    return fountain_from_coins(sigma.size(), cs);
}

/**
 * For sigma in S_n(321, 21-43) with sigma(1) != 1 and sigma(n) != n: keep the
 * maxima positions, lower every maximum value by one, and rebuild on [n-1].
 */
inline Permutation phi(const Permutation& sigma) {
    detail::require_class(sigma, PermClass::c321_2143v);
    const int n = sigma.size();
    if (n < 2 || sigma(1) == 1 || sigma(n) == n)
        throw Error(ErrorKind::precondition, "phi needs sigma(1) != 1 and sigma(n) != n");
    auto m = ltr_maxima(sigma);
    m.n = n - 1;
    for (int& v : m.values) --v;
    return from_ltr_maxima(m);
}

inline Permutation phi_inverse(const Permutation& tau) {
    detail::require_class(tau, PermClass::c321_2143v);
    if (tau.empty()) throw Error(ErrorKind::precondition, "phi inverse needs a nonempty permutation");
    auto m = ltr_maxima(tau);
    m.n = tau.size() + 1;
    for (int& v : m.values) ++v;
    return from_ltr_maxima(m);
}

// ---------------------------------------------------------------------------
// Boolean permutations and noncrossing nonnesting partitions
// ---------------------------------------------------------------------------

namespace detail {

// Indecomposable NCN partition of [m] -> single-cycle permutation
// (1 u_1 ... u_j s_k ... s_1).
inline Permutation component_to_perm(const SetPartition& part) {
    const int n = part.size();
    if (n == 1) return Permutation{1};
    if (n == 2) return Permutation{2, 1};
    const std::vector<int>* big = nullptr;
    std::vector<int> singles;
    for (const auto& b : part.blocks()) {
        if (b.size() == 1) singles.push_back(b.front());
        else if (big) throw Error(ErrorKind::not_in_class, "component has two non-singleton blocks");
        else big = &b;
    }
    if (!big || big->front() != 1 || big->back() != n)
        throw Error(ErrorKind::not_in_class, "component lacks a block joining 1 and n");
    const auto& u = *big;
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    auto set = [&](int pos, int val) { out[static_cast<std::size_t>(pos - 1)] = val; };
    for (std::size_t i = 1; i < u.size(); ++i) set(u[i - 1], u[i]);
    int prev = 1;
    for (int s : singles) {
        set(s, prev);
        prev = s;
    }
    set(n, prev);
    return Permutation(std::move(out));
}

}  // namespace detail

/// Component-wise single-cycle map, glued back with direct sums.
inline Permutation partition_to_perm(const SetPartition& pi) {
    if (!is_ncn(pi)) throw Error(ErrorKind::not_in_class, to_string(pi) + " is not noncrossing nonnesting");
    Permutation sigma;
    for (const auto& part : indecomposable_components(pi))
        sigma = direct_sum(sigma, detail::component_to_perm(part));
    return sigma;
}

inline SetPartition perm_to_partition(const Permutation& sigma) {
    detail::require_class(sigma, PermClass::c321_3412);
    std::vector<SetPartition> parts;
    for (const auto& comp : direct_sum_components(sigma)) {
        const int n = comp.size();
        std::vector<int> big{1};
        if (n > 1) {
            auto m = ltr_maxima(comp);
            big.insert(big.end(), m.values.begin(), m.values.end());
        }
        std::vector<std::vector<int>> blocks{big};
        for (int x = 2; x < n; ++x)
            if (!std::binary_search(big.begin(), big.end(), x)) blocks.push_back({x});
        parts.emplace_back(std::move(blocks));
    }
    return concatenate(parts);
}

// ---------------------------------------------------------------------------
// S_n(231, 3124) and DCC polyominoes
// ---------------------------------------------------------------------------

/**
 * Cell labelling: left to right, label each column from its top down to the
 * cell level with the next column's base; then right to left, label what is
 * left of each column top-down. Reading each column bottom-up gives the
 * descending runs.
 */
inline Permutation polyomino_to_perm(const DccPolyomino& poly) {
    const auto& cols = poly.columns();
    const std::size_t k = cols.size();
    std::vector<std::vector<int>> label(k);  // label[j][a - bottom]
    for (std::size_t j = 0; j < k; ++j) label[j].assign(static_cast<std::size_t>(cols[j].height), 0);
    int next = 1;
    for (std::size_t j = 0; j + 1 < k; ++j)
        for (int a = cols[j].top(); a >= cols[j + 1].bottom; --a)
            label[j][static_cast<std::size_t>(a - cols[j].bottom)] = next++;
    for (std::size_t j = k; j-- > 0;)
        for (int a = cols[j].top(); a >= cols[j].bottom; --a) {
            auto& cell = label[j][static_cast<std::size_t>(a - cols[j].bottom)];
            if (cell == 0) cell = next++;
        }
    std::vector<int> out;
    for (const auto& col : label) out.insert(out.end(), col.begin(), col.end());
    return Permutation(std::move(out));
}

/**
 * Each descending run w_j splits as u_j v_j, with v_j its longest suffix of
 * consecutive values. Column j+1 is attached so that its base cell is beside
 * the |v_j|-th cell from the top of column j.
 */
inline DccPolyomino perm_to_polyomino(const Permutation& sigma) {
    detail::require_class(sigma, PermClass::c231_3124);
    if (sigma.empty()) throw Error(ErrorKind::invalid_input, "polyomino area must be >= 1");
    std::vector<Column> cols;
    int bottom = 0;
    for (const auto& run : descending_runs(sigma).runs) {
        const int len = static_cast<int>(run.size());
        int v_len = 1;
        while (v_len < len && run[static_cast<std::size_t>(len - v_len - 1)] ==
                                  run[static_cast<std::size_t>(len - v_len)] + 1)
            ++v_len;
        for (int i = 1; i < len - v_len; ++i)
            if (run[static_cast<std::size_t>(i - 1)] != run[static_cast<std::size_t>(i)] + 1)
                throw Error(ErrorKind::run_shape, "descending run has more than two consecutive blocks");
        cols.push_back({bottom, len});
        bottom += len - v_len;
    }
    return DccPolyomino(std::move(cols));
}

/**
 * 21-inflation of the first entry: sigma(1) = sigma'(1) + 1, sigma(2) = sigma'(1),
 * later entries above sigma'(1) shift up by one.
 */
inline Permutation inflate21(const Permutation& sigma_prime) {
    detail::require_class(sigma_prime, PermClass::c231_3124);
    const int m = sigma_prime.size();
    if (m < 1 || sigma_prime(1) >= m)
        throw Error(ErrorKind::precondition, "21-inflation needs a first entry below the maximum");
    const int first = sigma_prime(1);
    std::vector<int> out{first + 1};
    for (int j = 1; j <= m; ++j) {
        int v = sigma_prime(j);
        out.push_back(v <= first ? v : v + 1);
    }
    return Permutation(std::move(out));
}

// ---------------------------------------------------------------------------
// Exhaustive verification
// ---------------------------------------------------------------------------

enum class Family { dyck, fountain, partition, polyomino };

inline constexpr Family all_families[] = {Family::dyck, Family::fountain, Family::partition, Family::polyomino};

inline std::string_view family_name(Family f) {
    switch (f) {
        case Family::dyck: return "dyck";
        case Family::fountain: return "fountain";
        case Family::partition: return "partition";
        case Family::polyomino: return "polyomino";
    }
    return "";
}

inline Family parse_family(std::string_view name) {
    for (auto f : all_families)
        if (family_name(f) == name) return f;
    throw Error(ErrorKind::invalid_input, "unknown family '" + std::string(name) + "'");
}

inline PermClass family_class(Family f) {
    switch (f) {
        case Family::dyck: return PermClass::c321_4123;
        case Family::fountain: return PermClass::c321_2143v;
        case Family::partition: return PermClass::c321_3412;
        case Family::polyomino: return PermClass::c231_3124;
    }
    return PermClass::c321_4123;
}

/// Object text -> permutation text, for any family.
inline std::string map_forward(Family f, std::string_view object) {
    switch (f) {
        case Family::dyck: {
            auto d = parse_dyck(object);
            if (stats(d).height > 3) throw Error(ErrorKind::not_in_class, "path height exceeds 3");
            return to_string(dyck_to_perm(d));
        }
        case Family::fountain: return to_string(fountain_to_perm(parse_fountain(object)));
        case Family::partition: return to_string(partition_to_perm(parse_partition(object)));
        case Family::polyomino: return to_string(polyomino_to_perm(parse_polyomino(object)));
    }
    return {};
}

/// Permutation text -> object text. The permutation must lie in the family's class.
inline std::string map_inverse(Family f, std::string_view perm) {
    auto sigma = parse_permutation(perm);
    detail::require_class(sigma, family_class(f));
    switch (f) {
        case Family::dyck: return to_string(perm_to_dyck(sigma));
        case Family::fountain: return to_string(perm_to_fountain(sigma));
        case Family::partition: return to_string(perm_to_partition(sigma));
        case Family::polyomino: return to_string(perm_to_polyomino(sigma));
    }
    return {};
}

/// Family objects of size n, as text, in each family's canonical order.
inline std::vector<std::string> enumerate_family(Family f, int n) {
    std::vector<std::string> out;
    auto dump = [&](const auto& items) {
        for (const auto& x : items) out.push_back(to_string(x));
    };
    switch (f) {
        case Family::dyck: dump(enumerate_bounded(n, 3)); break;
        case Family::fountain: dump(enumerate_fountains(n)); break;
        case Family::partition: dump(enumerate_ncn(n)); break;
        case Family::polyomino: dump(enumerate_dcc(n)); break;
    }
    return out;
}

struct BijectionReport {
    Family family = Family::dyck;
    int n = 0;
    std::size_t items = 0;
    bool forward_ok = false;
    bool inverse_ok = false;
    std::vector<std::string> mismatches;
};

/**
 * Enumerates both sides, maps objects forward and permutations back, and
 * checks that the forward image is exactly the class and both round trips
 * are identities.
 */
inline BijectionReport verify_family(Family f, int n) {
    BijectionReport rep;
    rep.family = f;
    rep.n = n;
    auto objects = enumerate_family(f, n);
    auto perms = enumerate_class(family_class(f), n);
    rep.items = objects.size();
    bool fwd = true, inv = true;
    auto note = [&](bool& flag, std::string what) {
        flag = false;
        if (rep.mismatches.size() < 20) rep.mismatches.push_back(std::move(what));
    };

    std::set<std::string> image;
    std::set<std::string> class_set;
    for (const auto& p : perms) class_set.insert(to_string(p));
    for (const auto& obj : objects) {
        try {
            auto p = map_forward(f, obj);
            if (!image.insert(p).second) note(fwd, "forward map not injective at " + obj);
            if (!class_set.contains(p)) note(fwd, obj + " -> " + p + " lies outside the class");
            auto back = map_inverse(f, p);
            if (back != obj) note(fwd, obj + " -> " + p + " -> " + back);
        } catch (const Error& e) {
            note(fwd, obj + ": " + e.what());
        }
    }
    if (image.size() != class_set.size()) note(fwd, "forward image size differs from class size");

    std::set<std::string> object_set(objects.begin(), objects.end());
    std::set<std::string> preimage;
    for (const auto& ps : class_set) {
        try {
            auto obj = map_inverse(f, ps);
            if (!preimage.insert(obj).second) note(inv, "inverse map not injective at " + ps);
            if (!object_set.contains(obj)) note(inv, ps + " -> " + obj + " is not an enumerated object");
            auto again = map_forward(f, obj);
            if (again != ps) note(inv, ps + " -> " + obj + " -> " + again);
        } catch (const Error& e) {
            note(inv, ps + ": " + e.what());
        }
    }
    rep.forward_ok = fwd;
    rep.inverse_ok = inv;
    return rep;
}

}  // namespace fibperm
