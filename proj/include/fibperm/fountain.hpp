#pragma once

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace fibperm {

/// An upper row: its leftmost coin rests in gap `start_gap` of the row below
/// (gap g lies between coins g and g+1 of that row).
struct FountainRow {
    int start_gap = 1;
    int length = 1;

    friend bool operator==(const FountainRow&, const FountainRow&) = default;
    friend auto operator<=>(const FountainRow&, const FountainRow&) = default;
};

/**
 * Coin position. Row 1 is the base. `left` is the leftmost base coin under
 * the coin's shadow; a coin in row r covers base coins [left, left + r - 1].
 * Coin (r, l) rests on (r-1, l) and (r-1, l+1).
 */
struct Coin {
    int row = 1;
    int left = 1;

    int right() const noexcept { return left + row - 1; }

    friend bool operator==(const Coin&, const Coin&) = default;
    friend auto operator<=>(const Coin&, const Coin&) = default;
};

using CoinSet = std::set<Coin>;

/// A block fountain: a base of n coins plus contiguous upper rows, bottom-up.
class BlockFountain {
public:
    BlockFountain() = default;

    BlockFountain(int base, std::vector<FountainRow> rows) : base_(base), rows_(std::move(rows)) {
        if (base_ < 1) throw Error(ErrorKind::empty_row, "base must hold at least one coin");
        int below = base_;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto& row = rows_[r];
            if (row.length < 1)
                throw Error(ErrorKind::empty_row, "row " + std::to_string(r + 2) + " is empty");
            if (row.start_gap < 1 || row.start_gap + row.length - 1 > below - 1)
                throw Error(ErrorKind::unsupported_row,
                            "row " + std::to_string(r + 2) + " does not rest on gaps of the row beneath");
            below = row.length;
        }
    }

    int base() const noexcept { return base_; }
    const std::vector<FountainRow>& rows() const noexcept { return rows_; }

    friend bool operator==(const BlockFountain&, const BlockFountain&) = default;
    friend auto operator<=>(const BlockFountain&, const BlockFountain&) = default;

private:
    int base_ = 1;
    std::vector<FountainRow> rows_;
};

inline CoinSet coins(const BlockFountain& f) {
    CoinSet out;
    for (int i = 1; i <= f.base(); ++i) out.insert({1, i});
    int left = 1;
    int row = 1;
    for (const auto& r : f.rows()) {
        left += r.start_gap - 1;
        ++row;
        for (int c = 0; c < r.length; ++c) out.insert({row, left + c});
    }
    return out;
}

/**
 * Rebuilds the row encoding from a set of coins over a base of n. Throws
 * when a row is not a single block or a coin lacks its two supports.
 */
inline BlockFountain fountain_from_coins(int base, const CoinSet& cs) {
    std::vector<std::vector<int>> by_row;
    for (const auto& c : cs) {
        if (c.row < 1 || c.left < 1 || c.right() > base)
            throw Error(ErrorKind::unsupported_row, "coin outside the base");
        if (static_cast<int>(by_row.size()) < c.row) by_row.resize(static_cast<std::size_t>(c.row));
        by_row[static_cast<std::size_t>(c.row - 1)].push_back(c.left);
    }
    if (by_row.empty() || static_cast<int>(by_row[0].size()) != base)
        throw Error(ErrorKind::empty_row, "base row incomplete");
    std::vector<FountainRow> rows;
    for (std::size_t r = 1; r < by_row.size(); ++r) {
        const auto& lefts = by_row[r];
        if (lefts.empty()) throw Error(ErrorKind::empty_row, "gap between rows");
        if (lefts.back() - lefts.front() + 1 != static_cast<int>(lefts.size()))
            throw Error(ErrorKind::unsupported_row, "row " + std::to_string(r + 1) + " is not contiguous");
        rows.push_back({lefts.front() - by_row[r - 1].front() + 1, static_cast<int>(lefts.size())});
    }
    return BlockFountain(base, std::move(rows));
}

/// Coins touched by nothing above, ordered left to right.
inline std::vector<Coin> peaks(const BlockFountain& f) {
    auto cs = coins(f);
    std::vector<Coin> out;
    for (const auto& c : cs)
        if (!cs.contains({c.row + 1, c.left - 1}) && !cs.contains({c.row + 1, c.left})) out.push_back(c);
    std::sort(out.begin(), out.end(), [](const Coin& a, const Coin& b) { return a.left < b.left; });
    return out;
}

/// Maximal stack over base coins [i, j]: rows of j-i+1, j-i, ..., 1 coins.
inline CoinSet triangular_stack(int i, int j) {
    if (i < 1 || j < i) throw Error(ErrorKind::invalid_input, "stack interval must satisfy 1 <= i <= j");
    CoinSet out;
    for (int r = 1; r <= j - i + 1; ++r)
        for (int l = i; l + r - 1 <= j; ++l) out.insert({r, l});
    return out;
}

/// All block n-fountains; row tuples in lexicographic order (shorter prefix first).
inline std::vector<BlockFountain> enumerate_fountains(int n) {
    if (n < 1) throw Error(ErrorKind::invalid_input, "base must be >= 1");
    std::vector<BlockFountain> out;
    std::vector<FountainRow> rows;
    auto grow = [&](auto&& self, int below) -> void {
        out.emplace_back(n, rows);
        for (int g = 1; g <= below - 1; ++g)
            for (int len = 1; g + len - 1 <= below - 1; ++len) {
                rows.push_back({g, len});
                self(self, len);
                rows.pop_back();
            }
    };
    grow(grow, n);
    return out;
}

/// "6 | (1,4) (2,2)"; a flat fountain prints as just its base.
inline std::string to_string(const BlockFountain& f) {
    std::string out = std::to_string(f.base());
    if (f.rows().empty()) return out;
    out += " |";
    for (const auto& r : f.rows())
        out += " (" + std::to_string(r.start_gap) + "," + std::to_string(r.length) + ")";
    return out;
}

inline BlockFountain parse_fountain(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto bad = [&] { return Error(ErrorKind::invalid_input, "bad fountain text '" + std::string(text) + "'"); };
    auto bar = s.find('|');
    std::string head = s.substr(0, bar);
    if (head.empty() || !std::all_of(head.begin(), head.end(), ::isdigit) || head.size() > 6) throw bad();
    int base = std::stoi(head);
    std::vector<FountainRow> rows;
    if (bar != std::string::npos) {
        std::size_t pos = bar + 1;
        while (pos < s.size()) {
            auto close = s.find(')', pos);
            if (s[pos] != '(' || close == std::string::npos) throw bad();
            auto inner = s.substr(pos + 1, close - pos - 1);
            auto comma = inner.find(',');
            if (comma == std::string::npos) throw bad();
            auto g = inner.substr(0, comma), l = inner.substr(comma + 1);
            if (g.empty() || l.empty() || g.size() > 6 || l.size() > 6 ||
                !std::all_of(g.begin(), g.end(), ::isdigit) || !std::all_of(l.begin(), l.end(), ::isdigit))
                throw bad();
            rows.push_back({std::stoi(g), std::stoi(l)});
            pos = close + 1;
        }
    }
    return BlockFountain(base, std::move(rows));
}

}  // namespace fibperm
