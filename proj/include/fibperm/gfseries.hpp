#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"

namespace fibperm {

using coeff_t = std::int64_t;

namespace detail {

inline coeff_t checked_add(coeff_t a, coeff_t b) {
    coeff_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "coefficient overflow");
    return r;
}

inline coeff_t checked_mul(coeff_t a, coeff_t b) {
    coeff_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "coefficient overflow");
    return r;
}

}  // namespace detail

/**
 * Integer polynomial in x whose coefficients are integer polynomials in t.
 * terms[i][j] is the coefficient of x^i t^j. Univariate series simply never
 * use t.
 */
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(coeff_t c) { add_term(c, 0, 0); }  // NOLINT: integer constants promote

    static BiPoly monomial(coeff_t c, int xdeg, int tdeg) {
        BiPoly p;
        p.add_term(c, xdeg, tdeg);
        return p;
    }
    static BiPoly x() { return monomial(1, 1, 0); }
    static BiPoly t() { return monomial(1, 0, 1); }

    const std::vector<std::vector<coeff_t>>& terms() const noexcept { return terms_; }

    /// Coefficient of x^i as a polynomial in t (empty when absent).
    std::vector<coeff_t> x_coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(terms_.size())) return {};
        return terms_[static_cast<std::size_t>(i)];
    }

    int x_degree() const noexcept { return static_cast<int>(terms_.size()) - 1; }

    void add_term(coeff_t c, int xdeg, int tdeg) {
        if (c == 0) return;
        auto xi = static_cast<std::size_t>(xdeg), ti = static_cast<std::size_t>(tdeg);
        if (terms_.size() <= xi) terms_.resize(xi + 1);
        if (terms_[xi].size() <= ti) terms_[xi].resize(ti + 1, 0);
        terms_[xi][ti] = detail::checked_add(terms_[xi][ti], c);
        normalize();
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (std::size_t i = 0; i < b.terms_.size(); ++i)
            for (std::size_t j = 0; j < b.terms_[i].size(); ++j)
                r.add_term(b.terms_[i][j], static_cast<int>(i), static_cast<int>(j));
        return r;
    }

    friend BiPoly operator-(const BiPoly& a) {
        BiPoly r = a;
        for (auto& row : r.terms_)
            for (auto& c : row) c = detail::checked_mul(c, -1);
        return r;
    }

    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            for (std::size_t j = 0; j < a.terms_[i].size(); ++j) {
                if (a.terms_[i][j] == 0) continue;
                for (std::size_t k = 0; k < b.terms_.size(); ++k)
                    for (std::size_t l = 0; l < b.terms_[k].size(); ++l)
                        if (b.terms_[k][l] != 0)
                            r.add_term(detail::checked_mul(a.terms_[i][j], b.terms_[k][l]),
                                       static_cast<int>(i + k), static_cast<int>(j + l));
            }
        return r;
    }

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    void normalize() {
        for (auto& row : terms_)
            while (!row.empty() && row.back() == 0) row.pop_back();
        while (!terms_.empty() && terms_.back().empty()) terms_.pop_back();
    }

    std::vector<std::vector<coeff_t>> terms_;
};

/// numerator / denominator; expansion needs the denominator's constant term to be +-1.
struct RationalGF {
    BiPoly numerator;
    BiPoly denominator{1};

    friend RationalGF operator+(const RationalGF& a, const RationalGF& b) {
        if (a.denominator == b.denominator) return {a.numerator + b.numerator, a.denominator};
        return {a.numerator * b.denominator + b.numerator * a.denominator, a.denominator * b.denominator};
    }

    friend RationalGF operator*(const RationalGF& a, const RationalGF& b) {
        return {a.numerator * b.numerator, a.denominator * b.denominator};
    }
};

struct TruncatedSeries {
    std::vector<coeff_t> coeffs;  // c_0 .. c_N

    int order() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    coeff_t operator[](int i) const { return coeffs[static_cast<std::size_t>(i)]; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

/// c_{n,k} for 1 <= k <= n <= N; rows[n-1][k-1].
struct BivariateTriangle {
    std::vector<std::vector<coeff_t>> rows;

    int order() const noexcept { return static_cast<int>(rows.size()); }
    coeff_t at(int n, int k) const {
        return rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)];
    }

    friend bool operator==(const BivariateTriangle&, const BivariateTriangle&) = default;
};

inline BivariateTriangle empty_triangle(int N) {
    BivariateTriangle tri;
    for (int n = 1; n <= N; ++n) tri.rows.emplace_back(static_cast<std::size_t>(n), 0);
    return tri;
}

/**
 * Coefficients of x^0..x^N, each a polynomial in t, by long division in x:
 * c_n = d_0 * (a_n - sum_{i>=1} d_i c_{n-i}) with d_0 = +-1.
 */
inline std::vector<std::vector<coeff_t>> expand_rows(const RationalGF& gf, int N) {
    if (N < 0) throw Error(ErrorKind::invalid_input, "order must be >= 0");
    const auto d0 = gf.denominator.x_coeff(0);
    if (d0.size() != 1 || (d0[0] != 1 && d0[0] != -1))
        throw Error(ErrorKind::non_invertible, "denominator constant term must be +-1");
    const coeff_t unit = d0[0];

    auto mul_add = [](std::vector<coeff_t>& acc, const std::vector<coeff_t>& a, const std::vector<coeff_t>& b,
                      coeff_t sign) {
        if (a.empty() || b.empty()) return;
        if (acc.size() < a.size() + b.size() - 1) acc.resize(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                acc[i + j] = detail::checked_add(acc[i + j],
                                                 detail::checked_mul(sign, detail::checked_mul(a[i], b[j])));
    };

    std::vector<std::vector<coeff_t>> c(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        auto acc = gf.numerator.x_coeff(n);
        for (int i = 1; i <= std::min(n, gf.denominator.x_degree()); ++i)
            mul_add(acc, gf.denominator.x_coeff(i), c[static_cast<std::size_t>(n - i)], -1);
        for (auto& v : acc) v = detail::checked_mul(v, unit);
        while (!acc.empty() && acc.back() == 0) acc.pop_back();
        c[static_cast<std::size_t>(n)] = std::move(acc);
    }
    return c;
}

/// Univariate expansion; throws if the series involves t.
inline TruncatedSeries expand_series(const RationalGF& gf, int N) {
    TruncatedSeries s;
    for (const auto& row : expand_rows(gf, N)) {
        if (row.size() > 1) throw Error(ErrorKind::invalid_input, "series depends on t");
        s.coeffs.push_back(row.empty() ? 0 : row[0]);
    }
    return s;
}

/// Bivariate expansion arranged as a triangle; throws if a term falls outside 1 <= k <= n.
inline BivariateTriangle expand_triangle(const RationalGF& gf, int N) {
    auto rows = expand_rows(gf, N);
    auto tri = empty_triangle(N);
    for (int n = 0; n <= N; ++n) {
        const auto& row = rows[static_cast<std::size_t>(n)];
        for (int k = 0; k < static_cast<int>(row.size()); ++k) {
            if (row[static_cast<std::size_t>(k)] == 0) continue;
            if (k < 1 || k > n)
                throw Error(ErrorKind::invalid_input, "term t^" + std::to_string(k) + " x^" + std::to_string(n) +
                                                          " outside the triangle");
            tri.rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] =
                row[static_cast<std::size_t>(k)];
        }
    }
    return tri;
}

// ---------------------------------------------------------------------------
// The closed forms
// ---------------------------------------------------------------------------

/// (x - x^2) / (1 - 3x + x^2)
inline RationalGF gf_odd_fibonacci() {
    const auto x = BiPoly::x();
    return {x - x * x, BiPoly(1) - 3 * x + x * x};
}

/// tx/(1-tx) + tx/(1-tx)^2 * (x-x^2)/(1-3x+x^2); position of 1 in S_n(321,4123) and S_n(231,3124).
inline RationalGF gf_position_of_one_321_4123() {
    const auto x = BiPoly::x(), t = BiPoly::t();
    const auto tx = t * x;
    const auto one_minus_tx = BiPoly(1) - tx;
    return RationalGF{tx, one_minus_tx} + RationalGF{tx, one_minus_tx * one_minus_tx} * gf_odd_fibonacci();
}

/// tx(1-tx)(1-2tx) / ((1-x-tx)(1-3tx+t^2x^2)); position of n in S_n(321, 21-43).
inline RationalGF gf_position_of_max_321_2143() {
    const auto x = BiPoly::x(), t = BiPoly::t();
    const auto tx = t * x;
    return {tx * (BiPoly(1) - tx) * (BiPoly(1) - 2 * tx),
            (BiPoly(1) - x - tx) * (BiPoly(1) - 3 * tx + tx * tx)};
}

/// (tx - 2tx^2 + t^2x^3) / ((1-tx)(1-3x+x^2)); position of 1 in S_n(321,3412).
inline RationalGF gf_position_of_one_321_3412() {
    const auto x = BiPoly::x(), t = BiPoly::t();
    const auto tx = t * x;
    return {tx - 2 * tx * x + t * t * x * x * x, (BiPoly(1) - tx) * (BiPoly(1) - 3 * x + x * x)};
}

inline RationalGF gf_position_of_one_231_3124() { return gf_position_of_one_321_4123(); }

// ---------------------------------------------------------------------------
// Combinatorial rules
// ---------------------------------------------------------------------------

/// F_{2n-1} via a_1 = 1, a_2 = 2, a_n = 3 a_{n-1} - a_{n-2}.
inline coeff_t fib_odd(int n) {
    if (n < 1) throw Error(ErrorKind::invalid_input, "fib_odd needs n >= 1");
    coeff_t prev = 1, cur = 1;  // a_0 = F_{-1} = 1 continues the recurrence backwards
    for (int i = 1; i < n; ++i) {
        coeff_t next = detail::checked_add(detail::checked_mul(3, cur), -prev);
        prev = cur;
        cur = next;
    }
    return cur;
}

/// k * g_{n-k} for k < n, 1 on the diagonal.
inline BivariateTriangle triangle_321_4123(int N) {
    auto tri = empty_triangle(N);
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= n; ++k)
            tri.rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] =
                k == n ? 1 : detail::checked_mul(k, fib_odd(n - k));
    return tri;
}

/// a_{n,1} = 1, a_{n,n} = F_{2n-3}, a_{n,k} = a_{n-1,k-1} + a_{n-1,k}.
inline BivariateTriangle triangle_321_2143(int N) {
    auto tri = empty_triangle(N);
    auto a = [&](int n, int k) -> coeff_t& {
        return tri.rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)];
    };
    for (int n = 1; n <= N; ++n) {
        a(n, 1) = 1;
        if (n > 1) a(n, n) = fib_odd(n - 1);
        for (int k = 2; k < n; ++k) a(n, k) = detail::checked_add(a(n - 1, k - 1), a(n - 1, k));
    }
    return tri;
}

/// Columns 1 and 2 are F_{2n-3}; column k >= 3 repeats entry (n-1, k-1).
inline BivariateTriangle triangle_321_3412(int N) {
    auto tri = empty_triangle(N);
    auto a = [&](int n, int k) -> coeff_t& {
        return tri.rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)];
    };
    for (int n = 1; n <= N; ++n) {
        if (n == 1) {
            a(1, 1) = 1;
            continue;
        }
        a(n, 1) = a(n, 2) = fib_odd(n - 1);
        for (int k = 3; k <= n; ++k) a(n, k) = a(n - 1, k - 1);
    }
    return tri;
}

/// Same rule k * g_{n-k}: the position of 1 splits off delta_j (-) (delta_{k-j} (+) rest).
inline BivariateTriangle triangle_231_3124(int N) { return triangle_321_4123(N); }

/**
 * True iff s_i = sum_j c_j s_{i-j} for every i in [from_index, N].
 * Throws insufficient_length when from_index < |c| or the series stops before from_index.
 */
inline bool check_recurrence(const TruncatedSeries& seq, const std::vector<coeff_t>& c, int from_index) {
    if (from_index < static_cast<int>(c.size()) || from_index > seq.order())
        throw Error(ErrorKind::insufficient_length, "not enough terms to test the recurrence");
    for (int i = from_index; i <= seq.order(); ++i) {
        coeff_t rhs = 0;
        for (std::size_t j = 0; j < c.size(); ++j)
            rhs = detail::checked_add(rhs, detail::checked_mul(c[j], seq[i - static_cast<int>(j) - 1]));
        if (rhs != seq[i]) return false;
    }
    return true;
}

inline std::string to_csv(const BivariateTriangle& tri) {
    std::ostringstream out;
    for (const auto& row : tri.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << row[k];
        out << '\n';
    }
    return out.str();
}

/// Accepts one row per line; blank lines are ignored.
inline BivariateTriangle parse_triangle_csv(const std::string& text) {
    BivariateTriangle tri;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<coeff_t> row;
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) {
            try {
                std::size_t used = 0;
                row.push_back(std::stoll(field, &used));
                if (field.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(field);
            } catch (const std::exception&) {
                throw Error(ErrorKind::invalid_input, "bad triangle entry '" + field + "'");
            }
        }
        if (row.size() != tri.rows.size() + 1)
            throw Error(ErrorKind::invalid_input, "triangle row " + std::to_string(tri.rows.size() + 1) +
                                                      " has " + std::to_string(row.size()) + " entries");
        tri.rows.push_back(std::move(row));
    }
    return tri;
}

}  // namespace fibperm
