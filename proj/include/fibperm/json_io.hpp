#pragma once

// nlohmann/json conversions for the library value types.

#include <string>
#include <vector>

#include <json.hpp>

#include "dyck.hpp"
#include "fountain.hpp"
#include "gfseries.hpp"
#include "partition.hpp"
#include "pattern.hpp"
#include "permutation.hpp"
#include "polyomino.hpp"

namespace fibperm {

using nlohmann::json;

inline void to_json(json& j, const Permutation& p) { j = std::vector<int>(p.begin(), p.end()); }
inline void from_json(const json& j, Permutation& p) { p = Permutation(j.get<std::vector<int>>()); }

inline void to_json(json& j, const Pattern& p) {
    j = json{{"values", p.values()}, {"glued", p.glued()}};
}
inline void from_json(const json& j, Pattern& p) {
    p = Pattern(j.at("values").get<Permutation>(), j.value("glued", std::vector<int>{}));
}

inline void to_json(json& j, const DyckPath& d) {
    j = json::array();
    for (Step s : d.steps()) j.push_back(std::string(1, static_cast<char>(s)));
}
inline void from_json(const json& j, DyckPath& d) {
    std::string text;
    for (const auto& s : j) text += s.get<std::string>();
    d = parse_dyck(text);
}

inline void to_json(json& j, const BlockFountain& f) {
    json rows = json::array();
    for (const auto& r : f.rows()) rows.push_back({r.start_gap, r.length});
    j = json{{"base", f.base()}, {"rows", rows}};
}
inline void from_json(const json& j, BlockFountain& f) {
    std::vector<FountainRow> rows;
    for (const auto& r : j.value("rows", json::array())) rows.push_back({r.at(0).get<int>(), r.at(1).get<int>()});
    f = BlockFountain(j.at("base").get<int>(), std::move(rows));
}

inline void to_json(json& j, const SetPartition& p) { j = p.blocks(); }
inline void from_json(const json& j, SetPartition& p) { p = SetPartition(j.get<std::vector<std::vector<int>>>()); }

inline void to_json(json& j, const DccPolyomino& p) {
    j = json::array();
    for (const auto& c : p.columns()) j.push_back({{"bottom", c.bottom}, {"height", c.height}});
}
inline void from_json(const json& j, DccPolyomino& p) {
    std::vector<Column> cols;
    for (const auto& c : j) cols.push_back({c.at("bottom").get<int>(), c.at("height").get<int>()});
    p = DccPolyomino(std::move(cols));
}

inline void to_json(json& j, const BivariateTriangle& t) { j = t.rows; }
inline void to_json(json& j, const TruncatedSeries& s) { j = s.coeffs; }

}  // namespace fibperm
