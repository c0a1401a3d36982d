#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace fibperm {

/**
 * A permutation of [n] in one-line notation.
 *
 * Positions and values are 1-based throughout the public interface:
 * `p(i)` is the image of i. The empty permutation (n = 0) is allowed so
 * that direct and skew sums have an identity.
 */
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
        std::vector<char> seen(values_.size() + 1, 0);
        for (int v : values_) {
            if (v < 1 || v > static_cast<int>(values_.size()) || seen[v])
                throw Error(ErrorKind::invalid_input,
                            "not a permutation of [" + std::to_string(values_.size()) + "]");
            seen[v] = 1;
        }
    }

    Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(unchecked, std::move(v));
    }

    /// n, n-1, ..., 1
    static Permutation decreasing(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.rbegin(), v.rend(), 1);
        return Permutation(unchecked, std::move(v));
    }

    int size() const noexcept { return static_cast<int>(values_.size()); }
    bool empty() const noexcept { return values_.empty(); }

    int operator()(int position) const { return values_[static_cast<std::size_t>(position - 1)]; }

    std::span<const int> values() const noexcept { return values_; }

    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    Permutation inverse() const {
        std::vector<int> inv(values_.size());
        for (std::size_t i = 0; i < values_.size(); ++i)
            inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i + 1);
        return Permutation(unchecked, std::move(inv));
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.values_ <=> b.values_;
    }

private:
    struct unchecked_t {};
    static constexpr unchecked_t unchecked{};
    Permutation(unchecked_t, std::vector<int> values) : values_(std::move(values)) {}

    std::vector<int> values_;
};

/// Digit string for n <= 9 ("24513"), comma separated otherwise.
inline std::string to_string(const Permutation& p) {
    std::string out;
    const bool commas = p.size() > 9;
    for (int i = 1; i <= p.size(); ++i) {
        if (commas && i > 1) out += ',';
        out += std::to_string(p(i));
    }
    return out;
}

inline Permutation parse_permutation(std::string_view text) {
    std::vector<int> values;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find(',', start);
            if (end == std::string_view::npos) end = text.size();
            auto field = text.substr(start, end - start);
            if (field.empty() || field.size() > 6 ||
                !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw Error(ErrorKind::invalid_input, "bad permutation entry '" + std::string(field) + "'");
            values.push_back(std::stoi(std::string(field)));
            start = end + 1;
        }
    } else {
        for (char c : text) {
            if (c < '0' || c > '9')
                throw Error(ErrorKind::invalid_input, std::string("bad permutation character '") + c + "'");
            values.push_back(c - '0');
        }
    }
    return Permutation(std::move(values));
}

/// pi followed by a shifted copy of sigma.
inline Permutation direct_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> v(a.begin(), a.end());
    for (int x : b) v.push_back(x + a.size());
    return Permutation(std::move(v));
}

/// sigma preceded by a shifted copy of pi.
inline Permutation skew_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(a.size() + b.size()));
    for (int x : a) v.push_back(x + b.size());
    v.insert(v.end(), b.begin(), b.end());
    return Permutation(std::move(v));
}

/// Position k with p(k) == value.
inline int position_of(const Permutation& p, int value) {
    if (value < 1 || value > p.size())
        throw Error(ErrorKind::invalid_input, "value " + std::to_string(value) + " out of range");
    auto it = std::find(p.begin(), p.end(), value);
    return static_cast<int>(it - p.begin()) + 1;
}

/// Left-to-right maxima: positions i_1 = 1 < ... < i_k and values v_1 < ... < v_k = n.
struct LtrMaxima {
    int n = 0;
    std::vector<int> positions;
    std::vector<int> values;

    friend bool operator==(const LtrMaxima&, const LtrMaxima&) = default;
};

inline LtrMaxima ltr_maxima(const Permutation& p) {
    LtrMaxima m;
    m.n = p.size();
    int best = 0;
    for (int i = 1; i <= p.size(); ++i) {
        if (p(i) > best) {
            best = p(i);
            m.positions.push_back(i);
            m.values.push_back(best);
        }
    }
    return m;
}

/**
 * The unique 321-avoiding permutation whose left-to-right maxima sit at the
 * given positions with the given values. Non-maximum positions receive the
 * remaining values in increasing order.
 *
 * Throws invalid_maxima when the data is malformed or not realizable, i.e.
 * when the filled-in permutation would have a different set of maxima.
 */
inline Permutation from_ltr_maxima(const LtrMaxima& m) {
    const int n = m.n;
    const auto k = m.positions.size();
    auto fail = [](const std::string& why) { throw Error(ErrorKind::invalid_maxima, why); };
    if (n == 0) {
        if (k != 0) fail("maxima given for empty permutation");
        return Permutation{};
    }
    if (k == 0 || k != m.values.size()) fail("positions and values must be nonempty and of equal length");
    if (m.positions.front() != 1) fail("first maximum must be at position 1");
    if (m.values.back() != n) fail("last maximum must be n");
    for (std::size_t j = 0; j < k; ++j) {
        if (m.positions[j] < 1 || m.positions[j] > n || m.values[j] < 1)
            fail("maxima out of range");
        if (j > 0 && (m.positions[j] <= m.positions[j - 1] || m.values[j] <= m.values[j - 1]))
            fail("positions and values must be strictly increasing");
        if (m.values[j] < m.positions[j])
            fail("value " + std::to_string(m.values[j]) + " below its position " +
                 std::to_string(m.positions[j]));
    }

    std::vector<int> out(static_cast<std::size_t>(n), 0);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t j = 0; j < k; ++j) {
        out[static_cast<std::size_t>(m.positions[j] - 1)] = m.values[j];
        used[static_cast<std::size_t>(m.values[j])] = 1;
    }
    int next = 1;
    for (auto& slot : out) {
        if (slot != 0) continue;
        while (used[static_cast<std::size_t>(next)]) ++next;
        slot = next++;
    }
    Permutation p(std::move(out));
    if (ltr_maxima(p) != m) fail("maxima are not realizable by a 321-avoiding permutation");
    return p;
}

/// Maximal strictly decreasing contiguous factors, left to right.
struct DescendingRuns {
    std::vector<std::vector<int>> runs;
};

inline DescendingRuns descending_runs(const Permutation& p) {
    DescendingRuns d;
    for (int i = 1; i <= p.size(); ++i) {
        if (i == 1 || p(i) > p(i - 1)) d.runs.emplace_back();
        d.runs.back().push_back(p(i));
    }
    return d;
}

/// Lengths of the direct-sum components (each component is indecomposable).
inline std::vector<int> component_lengths(const Permutation& p) {
    std::vector<int> lengths;
    int start = 0;
    int running_max = 0;
    for (int i = 1; i <= p.size(); ++i) {
        running_max = std::max(running_max, p(i));
        if (running_max == i) {
            lengths.push_back(i - start);
            start = i;
        }
    }
    return lengths;
}

/// Splits p = c_1 (+) c_2 (+) ... into indecomposable components.
inline std::vector<Permutation> direct_sum_components(const Permutation& p) {
    std::vector<Permutation> parts;
    int offset = 0;
    for (int len : component_lengths(p)) {
        std::vector<int> v;
        for (int i = offset + 1; i <= offset + len; ++i) v.push_back(p(i) - offset);
        parts.emplace_back(std::move(v));
        offset += len;
    }
    return parts;
}

/// Not a direct sum of two nonempty permutations.
inline bool is_indecomposable(const Permutation& p) {
    return p.size() >= 1 && component_lengths(p).size() == 1;
}

}  // namespace fibperm
