#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace fibperm {

struct Column {
    int bottom = 0;  // absolute altitude of the lowest cell
    int height = 1;

    int top() const noexcept { return bottom + height - 1; }

    friend bool operator==(const Column&, const Column&) = default;
    friend auto operator<=>(const Column&, const Column&) = default;
};

/**
 * Directed column-convex polyomino, columns left to right, first column
 * grounded at altitude 0. Directedness is the window condition
 * bottom_j <= bottom_{j+1} <= top_j: the base cell of every column sits
 * beside a cell of its left neighbour, so every cell is reachable from the
 * seed cell by right and up moves.
 */
class DccPolyomino {
public:
    DccPolyomino() = default;

    explicit DccPolyomino(std::vector<Column> columns) : columns_(std::move(columns)) {
        if (columns_.empty()) throw Error(ErrorKind::empty_column, "polyomino has no columns");
        if (columns_.front().bottom != 0)
            throw Error(ErrorKind::detached_column, "first column must start at altitude 0");
        for (std::size_t j = 0; j < columns_.size(); ++j) {
            if (columns_[j].height < 1)
                throw Error(ErrorKind::empty_column, "column " + std::to_string(j + 1) + " is empty");
            if (j > 0 && (columns_[j].bottom < columns_[j - 1].bottom ||
                          columns_[j].bottom > columns_[j - 1].top()))
                throw Error(ErrorKind::detached_column,
                            "column " + std::to_string(j + 1) + " does not rest against its left neighbour");
        }
    }

    const std::vector<Column>& columns() const noexcept { return columns_; }

    int area() const noexcept {
        int a = 0;
        for (const auto& c : columns_) a += c.height;
        return a;
    }

    friend bool operator==(const DccPolyomino&, const DccPolyomino&) = default;
    friend auto operator<=>(const DccPolyomino&, const DccPolyomino&) = default;

private:
    std::vector<Column> columns_;
};

inline int first_column_height(const DccPolyomino& p) { return p.columns().front().height; }

/// All DCC polyominoes of area n, lexicographic on the column tuples.
inline std::vector<DccPolyomino> enumerate_dcc(int n) {
    if (n < 1) throw Error(ErrorKind::invalid_input, "area must be >= 1");
    std::vector<DccPolyomino> out;
    std::vector<Column> cols;
    auto attach = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(cols);
            return;
        }
        int lo = 0, hi = 0;
        if (!cols.empty()) {
            lo = cols.back().bottom;
            hi = cols.back().top();
        }
        for (int b = lo; b <= hi; ++b)
            for (int h = 1; h <= remaining; ++h) {
                cols.push_back({b, h});
                self(self, remaining - h);
                cols.pop_back();
            }
    };
    attach(attach, n);
    return out;
}

/// "0:3,2:3,3:1,3:2"
inline std::string to_string(const DccPolyomino& p) {
    std::string out;
    for (std::size_t j = 0; j < p.columns().size(); ++j) {
        if (j > 0) out += ',';
        out += std::to_string(p.columns()[j].bottom) + ':' + std::to_string(p.columns()[j].height);
    }
    return out;
}

inline DccPolyomino parse_polyomino(std::string_view text) {
    std::vector<Column> cols;
    auto bad = [&] { return Error(ErrorKind::invalid_input, "bad polyomino text '" + std::string(text) + "'"); };
    auto number = [&](std::string_view s) {
        if (s.empty() || s.size() > 6) throw bad();
        for (char c : s)
            if (c < '0' || c > '9') throw bad();
        return std::stoi(std::string(s));
    };
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        auto field = text.substr(start, end - start);
        auto colon = field.find(':');
        if (colon == std::string_view::npos) throw bad();
        cols.push_back({number(field.substr(0, colon)), number(field.substr(colon + 1))});
        start = end + 1;
    }
    return DccPolyomino(std::move(cols));
}

}  // namespace fibperm
