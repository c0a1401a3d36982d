#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace fibperm {

/// A set partition of [n] in canonical form: blocks ordered by minimum,
/// elements ascending within each block.
class SetPartition {
public:
    SetPartition() = default;

    explicit SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
        for (auto& b : blocks_) {
            if (b.empty()) throw Error(ErrorKind::invalid_input, "empty block");
            std::sort(b.begin(), b.end());
            n_ += static_cast<int>(b.size());
        }
        std::sort(blocks_.begin(), blocks_.end());
        std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
        for (const auto& b : blocks_)
            for (int x : b) {
                if (x < 1 || x > n_ || seen[static_cast<std::size_t>(x)])
                    throw Error(ErrorKind::invalid_input, "blocks do not partition [" + std::to_string(n_) + "]");
                seen[static_cast<std::size_t>(x)] = 1;
            }
    }

    int size() const noexcept { return n_; }
    const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;

private:
    std::vector<std::vector<int>> blocks_;
    int n_ = 0;
};

/// Restricted growth string a_1..a_n (0-based block labels, a_1 = 0) to partition.
inline SetPartition from_rgs(const std::vector<int>& rgs) {
    std::vector<std::vector<int>> blocks;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
        auto b = static_cast<std::size_t>(rgs[i]);
        if (b > blocks.size()) throw Error(ErrorKind::invalid_input, "not a restricted growth string");
        if (b == blocks.size()) blocks.emplace_back();
        blocks[b].push_back(static_cast<int>(i) + 1);
    }
    return SetPartition(std::move(blocks));
}

inline SetPartition singletons(int n) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= n; ++i) blocks.push_back({i});
    return SetPartition(std::move(blocks));
}

struct ArcDiagram {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;  // (i, j) with i < j, sorted by left endpoint
};

inline ArcDiagram arcs(const SetPartition& p) {
    ArcDiagram d{p.size(), {}};
    for (const auto& b : p.blocks())
        for (std::size_t i = 1; i < b.size(); ++i) d.arcs.emplace_back(b[i - 1], b[i]);
    std::sort(d.arcs.begin(), d.arcs.end());
    return d;
}

inline int crossings(const ArcDiagram& d) {
    int count = 0;
    for (const auto& [i1, j1] : d.arcs)
        for (const auto& [i2, j2] : d.arcs)
            if (i1 < i2 && i2 < j1 && j1 < j2) ++count;
    return count;
}

inline int nestings(const ArcDiagram& d) {
    int count = 0;
    for (const auto& [i1, j1] : d.arcs)
        for (const auto& [i2, j2] : d.arcs)
            if (i1 < i2 && j2 < j1) ++count;
    return count;
}

inline bool is_ncn(const SetPartition& p) {
    auto d = arcs(p);
    return crossings(d) == 0 && nestings(d) == 0;
}

/// Splits p = p_1 | p_2 | ... on consecutive intervals, each relabeled to start at 1.
inline std::vector<SetPartition> indecomposable_components(const SetPartition& p) {
    const int n = p.size();
    std::vector<int> block_max(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> block_of(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t b = 0; b < p.blocks().size(); ++b)
        for (int x : p.blocks()[b]) {
            block_of[static_cast<std::size_t>(x)] = static_cast<int>(b);
            block_max[static_cast<std::size_t>(x)] = p.blocks()[b].back();
        }
    std::vector<SetPartition> parts;
    int start = 1;
    int reach = 0;
    for (int i = 1; i <= n; ++i) {
        reach = std::max(reach, block_max[static_cast<std::size_t>(i)]);
        if (reach != i) continue;
        std::vector<std::vector<int>> blocks;
        std::vector<int> seen_block;
        for (int x = start; x <= i; ++x) {
            int b = block_of[static_cast<std::size_t>(x)];
            auto it = std::find(seen_block.begin(), seen_block.end(), b);
            if (it == seen_block.end()) {
                seen_block.push_back(b);
                blocks.emplace_back();
                it = seen_block.end() - 1;
            }
            blocks[static_cast<std::size_t>(it - seen_block.begin())].push_back(x - start + 1);
        }
        parts.emplace_back(std::move(blocks));
        start = i + 1;
    }
    return parts;
}

inline bool is_indecomposable(const SetPartition& p) {
    return p.size() >= 1 && indecomposable_components(p).size() == 1;
}

/// Places the components side by side, shifting each past its predecessors.
inline SetPartition concatenate(const std::vector<SetPartition>& parts) {
    std::vector<std::vector<int>> blocks;
    int offset = 0;
    for (const auto& part : parts) {
        for (auto b : part.blocks()) {
            for (int& x : b) x += offset;
            blocks.push_back(std::move(b));
        }
        offset += part.size();
    }
    return SetPartition(std::move(blocks));
}

/**
 * All noncrossing nonnesting partitions of [n], in restricted-growth-string
 * order. A new arc (l, i) has the largest right endpoint so far, so against
 * an existing arc (a, c) it crosses iff a < l < c and nests over it iff l < a.
 */
inline std::vector<SetPartition> enumerate_ncn(int n) {
    if (n < 1) throw Error(ErrorKind::invalid_input, "n must be >= 1");
    std::vector<SetPartition> out;
    std::vector<int> rgs;
    std::vector<int> last;  // last element of each open block
    std::vector<std::pair<int, int>> arcs_so_far;

    auto place = [&](auto&& self, int i) -> void {
        if (i > n) {
            out.push_back(from_rgs(rgs));
            return;
        }
        for (std::size_t b = 0; b <= last.size(); ++b) {
            if (b == last.size()) {
                rgs.push_back(static_cast<int>(b));
                last.push_back(i);
                self(self, i + 1);
                last.pop_back();
                rgs.pop_back();
                break;
            }
            const int l = last[b];
            bool clash = std::any_of(arcs_so_far.begin(), arcs_so_far.end(),
                                     [&](const auto& a) { return (a.first < l && l < a.second) || l < a.first; });
            if (clash) continue;
            rgs.push_back(static_cast<int>(b));
            arcs_so_far.emplace_back(l, i);
            last[b] = i;
            self(self, i + 1);
            last[b] = l;
            arcs_so_far.pop_back();
            rgs.pop_back();
        }
    };
    place(place, 1);
    return out;
}

/// min over blocks of the block maximum.
inline int m_statistic(const SetPartition& p) {
    int best = p.size();
    for (const auto& b : p.blocks()) best = std::min(best, b.back());
    return best;
}

/// "1,2,4/3/5"
inline std::string to_string(const SetPartition& p) {
    std::string out;
    for (std::size_t b = 0; b < p.blocks().size(); ++b) {
        if (b > 0) out += '/';
        for (std::size_t i = 0; i < p.blocks()[b].size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(p.blocks()[b][i]);
        }
    }
    return out;
}

inline SetPartition parse_partition(std::string_view text) {
    std::vector<std::vector<int>> blocks(1);
    std::string num;
    auto flush = [&] {
        if (num.empty() || num.size() > 6)
            throw Error(ErrorKind::invalid_input, "bad partition text '" + std::string(text) + "'");
        blocks.back().push_back(std::stoi(num));
        num.clear();
    };
    for (char c : text) {
        if (c >= '0' && c <= '9') num += c;
        else if (c == ',') flush();
        else if (c == '/') { flush(); blocks.emplace_back(); }
        else if (c != ' ') throw Error(ErrorKind::invalid_input, "bad partition text '" + std::string(text) + "'");
    }
    flush();
    return SetPartition(std::move(blocks));
}

}  // namespace fibperm
