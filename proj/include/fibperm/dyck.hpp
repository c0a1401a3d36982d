#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace fibperm {

enum class Step : char { up = 'U', down = 'D' };

/// A Dyck path: as many up-steps as down-steps, never below the axis.
class DyckPath {
public:
    DyckPath() = default;

    explicit DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
        int altitude = 0;
        for (Step s : steps_) {
            altitude += s == Step::up ? 1 : -1;
            if (altitude < 0) throw Error(ErrorKind::negative_prefix, "path dips below the axis");
        }
        if (altitude != 0) throw Error(ErrorKind::unbalanced, "path does not return to the axis");
    }

    int semilength() const noexcept { return static_cast<int>(steps_.size() / 2); }
    const std::vector<Step>& steps() const noexcept { return steps_; }

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend auto operator<=>(const DyckPath& a, const DyckPath& b) {
        // 'D' < 'U' as characters; the path order puts U first.
        return std::lexicographical_compare_three_way(
            a.steps_.begin(), a.steps_.end(), b.steps_.begin(), b.steps_.end(),
            [](Step x, Step y) { return (x == Step::down) <=> (y == Step::down); });
    }

private:
    std::vector<Step> steps_;
};

inline DyckPath parse_dyck(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
        if (c == 'U') steps.push_back(Step::up);
        else if (c == 'D') steps.push_back(Step::down);
        else throw Error(ErrorKind::invalid_input, std::string("bad step symbol '") + c + "'");
    }
    return DyckPath(std::move(steps));
}

inline std::string to_string(const DyckPath& d) {
    std::string out;
    for (Step s : d.steps()) out += static_cast<char>(s);
    return out;
}

struct Peak {
    int position;  // 1-based index of the up-step of the UD factor
    int altitude;  // height reached at the top of the peak

    friend bool operator==(const Peak&, const Peak&) = default;
};

struct PathStats {
    int height = 0;
    std::vector<Peak> peaks;
    /// 1-based step index where the first maximal descent of length >= 2 starts.
    std::optional<int> first_long_descent;
    /// Ordinal of that descent among all maximal descents, counted left to right.
    std::optional<int> first_long_descent_ordinal;
};

inline PathStats stats(const DyckPath& d) {
    PathStats st;
    const auto& s = d.steps();
    int altitude = 0;
    int descent_ordinal = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == Step::up) {
            ++altitude;
            st.height = std::max(st.height, altitude);
            if (i + 1 < s.size() && s[i + 1] == Step::down)
                st.peaks.push_back({static_cast<int>(i) + 1, altitude});
            continue;
        }
        --altitude;
        if (i > 0 && s[i - 1] == Step::down) continue;
        ++descent_ordinal;
        std::size_t len = 0;
        while (i + len < s.size() && s[i + len] == Step::down) ++len;
        if (len >= 2 && !st.first_long_descent) {
            st.first_long_descent = static_cast<int>(i) + 1;
            st.first_long_descent_ordinal = descent_ordinal;
        }
    }
    return st;
}

/**
 * The column a height-bounded path occupies in the positional triangle for
 * the position of 1: column 1 for paths starting with UD, otherwise one more
 * than the ordinal of the first long descent. Under the maxima-to-path map
 * this equals the position of 1 in the corresponding permutation.
 */
inline int descent_column(const DyckPath& d) {
    const auto& s = d.steps();
    if (s.size() >= 2 && s[0] == Step::up && s[1] == Step::down) return 1;
    auto st = stats(d);
    if (!st.first_long_descent_ordinal)
        throw Error(ErrorKind::invalid_input, "path has no long descent");
    return *st.first_long_descent_ordinal + 1;
}

/// All Dyck paths of semilength n and height at most hmax, U before D.
inline std::vector<DyckPath> enumerate_bounded(int n, int hmax) {
    if (n < 1 || hmax < 1) throw Error(ErrorKind::invalid_input, "need n >= 1 and hmax >= 1");
    std::vector<DyckPath> out;
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(2 * n));
    auto walk = [&](auto&& self, int ups, int downs) -> void {
        if (downs == n) {
            out.emplace_back(steps);
            return;
        }
        int altitude = ups - downs;
        if (ups < n && altitude < hmax) {
            steps.push_back(Step::up);
            self(self, ups + 1, downs);
            steps.pop_back();
        }
        if (altitude > 0) {
            steps.push_back(Step::down);
            self(self, ups, downs + 1);
            steps.pop_back();
        }
    };
    walk(walk, 0, 0);
    return out;
}

}  // namespace fibperm
