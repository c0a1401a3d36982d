#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"

namespace fibperm {

/**
 * A classical pattern with optional adjacency constraints (vincular).
 *
 * `glued` holds 1-based indices i in [1, k-1]: the entries matched to
 * pattern positions i and i+1 must occupy adjacent host positions.
 * An empty set means a classical pattern.
 */
class Pattern {
public:
    Pattern() = default;

    explicit Pattern(Permutation values, std::vector<int> glued = {})
        : values_(std::move(values)), glued_(std::move(glued)) {
        if (values_.empty()) throw Error(ErrorKind::invalid_input, "pattern must be nonempty");
        std::sort(glued_.begin(), glued_.end());
        glued_.erase(std::unique(glued_.begin(), glued_.end()), glued_.end());
        for (int g : glued_)
            if (g < 1 || g >= values_.size())
                throw Error(ErrorKind::invalid_input, "adjacency index " + std::to_string(g) + " out of range");
        adjacent_.assign(static_cast<std::size_t>(values_.size()), 0);
        for (int g : glued_) adjacent_[static_cast<std::size_t>(g)] = 1;
    }

    const Permutation& values() const noexcept { return values_; }
    const std::vector<int>& glued() const noexcept { return glued_; }
    int size() const noexcept { return values_.size(); }
    bool classical() const noexcept { return glued_.empty(); }

    /// True if 0-based pattern positions p-1 and p must be adjacent in the host.
    bool glued_before(std::size_t p) const noexcept { return adjacent_[p] != 0; }

    friend bool operator==(const Pattern& a, const Pattern& b) {
        return a.values_ == b.values_ && a.glued_ == b.glued_;
    }

private:
    Permutation values_;
    std::vector<int> glued_;
    std::vector<char> adjacent_;
};

/**
 * Text form. Without a dash the pattern is classical ("3412"). With dashes,
 * every dash-terminated segment is a glued group and the segment after the
 * last dash is free: "21-43" glues the 21 only, "21-43-" glues both pairs.
 * '_' is accepted as a synonym of '-'.
 */
inline Pattern parse_pattern(std::string_view text) {
    std::vector<int> values;
    std::vector<int> glued;
    std::size_t segment_start = 0;
    for (char c : text) {
        if (c == '-' || c == '_') {
            if (values.size() == segment_start)
                throw Error(ErrorKind::invalid_input, "empty pattern segment in '" + std::string(text) + "'");
            for (std::size_t i = segment_start + 1; i < values.size(); ++i)
                glued.push_back(static_cast<int>(i));
            segment_start = values.size();
        } else if (c >= '1' && c <= '9') {
            values.push_back(c - '0');
        } else {
            throw Error(ErrorKind::invalid_input, "bad pattern character in '" + std::string(text) + "'");
        }
    }
    if (values.empty()) throw Error(ErrorKind::invalid_input, "empty pattern");
    return Pattern(Permutation(std::move(values)), std::move(glued));
}

inline std::string to_string(const Pattern& pat) {
    const auto& v = pat.values();
    std::string out;
    if (pat.classical()) {
        for (int x : v) out += static_cast<char>('0' + x);
        return out;
    }
    // Glued groups up to the last glued pair are dash-terminated; the rest stays bare.
    const int closes = pat.glued().back() + 1;
    for (int i = 1; i <= v.size(); ++i) {
        out += static_cast<char>('0' + v(i));
        if (i == closes || (i < closes && !pat.glued_before(static_cast<std::size_t>(i)))) out += '-';
    }
    return out;
}

namespace detail {

// Backtracking over index subsequences. Visits every occurrence; the visitor
// returns false to stop. If `anchor_last`, the final pattern entry must be
// matched to the final host entry.
template <class Visit>
bool for_each_occurrence(std::span<const int> host, const Pattern& pat, bool anchor_last, Visit&& visit) {
    const auto k = static_cast<std::size_t>(pat.size());
    const auto n = host.size();
    if (k > n) return true;
    const auto pv = pat.values().values();
    std::vector<std::size_t> idx(k);

    auto rec = [&](auto&& self, std::size_t p, std::size_t from) -> bool {
        if (p == k) return visit(std::span<const std::size_t>(idx));
        std::size_t lo = from;
        std::size_t hi = n - (k - p);  // leave room for the remaining entries
        if (p > 0 && pat.glued_before(p)) hi = std::min(hi, lo);
        if (anchor_last && p + 1 == k) lo = std::max(lo, n - 1);
        for (std::size_t h = lo; h <= hi; ++h) {
            bool ok = true;
            for (std::size_t q = 0; q < p && ok; ++q)
                ok = (pv[q] < pv[p]) == (host[idx[q]] < host[h]);
            if (!ok) continue;
            idx[p] = h;
            if (!self(self, p + 1, h + 1)) return false;
        }
        return true;
    };
    return rec(rec, 0, 0);
}

}  // namespace detail

/// Works on any sequence of distinct integers, not only permutations.
inline bool contains(std::span<const int> host, const Pattern& pat) {
    bool found = false;
    detail::for_each_occurrence(host, pat, false, [&](auto) { found = true; return false; });
    return found;
}

inline bool contains(const Permutation& host, const Pattern& pat) { return contains(host.values(), pat); }

inline std::uint64_t count_occurrences(const Permutation& host, const Pattern& pat) {
    std::uint64_t count = 0;
    detail::for_each_occurrence(host.values(), pat, false, [&](auto) { ++count; return true; });
    return count;
}

inline bool avoids_all(std::span<const int> host, std::span<const Pattern> pats) {
    return std::none_of(pats.begin(), pats.end(), [&](const Pattern& p) { return contains(host, p); });
}

inline bool avoids_all(const Permutation& host, std::span<const Pattern> pats) {
    return avoids_all(host.values(), pats);
}

inline constexpr int default_oracle_bound = 9;

/// Brute force over all n! permutations in lexicographic order.
inline std::vector<Permutation> avoiders_filter(int n, std::span<const Pattern> pats,
                                                int bound = default_oracle_bound) {
    if (n < 0) throw Error(ErrorKind::invalid_input, "negative size");
    if (n > bound)
        throw Error(ErrorKind::bound_exceeded,
                    "n = " + std::to_string(n) + " exceeds oracle bound " + std::to_string(bound));
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        if (avoids_all(std::span<const int>(v), pats)) out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/**
 * Left-to-right extension with pruning. A prefix containing a pattern is
 * abandoned: appending entries on the right keeps every existing occurrence
 * (adjacencies included), so only occurrences ending at the newest entry
 * need checking at each step. Output order is lexicographic.
 */
inline std::vector<Permutation> avoiders_pruned(int n, std::span<const Pattern> pats) {
    if (n < 0) throw Error(ErrorKind::invalid_input, "negative size");
    std::vector<Permutation> out;
    std::vector<int> prefix;
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);

    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(prefix.size()) == n) {
            out.emplace_back(prefix);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            prefix.push_back(v);
            bool clean = true;
            for (const auto& pat : pats) {
                detail::for_each_occurrence(prefix, pat, true, [&](auto) { clean = false; return false; });
                if (!clean) break;
            }
            if (clean) {
                used[static_cast<std::size_t>(v)] = 1;
                self(self);
                used[static_cast<std::size_t>(v)] = 0;
            }
            prefix.pop_back();
        }
    };
    extend(extend);
    return out;
}

/// The four pattern classes counted by odd-indexed Fibonacci numbers.
enum class PermClass { c321_4123, c321_2143v, c321_3412, c231_3124 };

inline constexpr PermClass all_classes[] = {PermClass::c321_4123, PermClass::c321_2143v,
                                            PermClass::c321_3412, PermClass::c231_3124};

inline std::string_view class_name(PermClass c) {
    switch (c) {
        case PermClass::c321_4123: return "321-4123";
        case PermClass::c321_2143v: return "321-21_43";
        case PermClass::c321_3412: return "321-3412";
        case PermClass::c231_3124: return "231-3124";
    }
    return "";
}

inline PermClass parse_class(std::string_view name) {
    for (auto c : all_classes)
        if (class_name(c) == name) return c;
    throw Error(ErrorKind::invalid_input, "unknown class '" + std::string(name) + "'");
}

inline std::vector<Pattern> class_patterns(PermClass c) {
    switch (c) {
        case PermClass::c321_4123: return {parse_pattern("321"), parse_pattern("4123")};
        case PermClass::c321_2143v: return {parse_pattern("321"), parse_pattern("21-43")};
        case PermClass::c321_3412: return {parse_pattern("321"), parse_pattern("3412")};
        case PermClass::c231_3124: return {parse_pattern("231"), parse_pattern("3124")};
    }
    return {};
}

inline bool in_class(const Permutation& p, PermClass c) {
    auto pats = class_patterns(c);
    return avoids_all(p, pats);
}

inline std::vector<Permutation> enumerate_class(PermClass c, int n) {
    auto pats = class_patterns(c);
    return avoiders_pruned(n, pats);
}

}  // namespace fibperm
