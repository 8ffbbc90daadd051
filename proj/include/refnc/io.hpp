#pragma once

/**
 * @file io.hpp
 * @brief JSON encodings: group files, dual graphs, series, character tables.
 *
 * Every scalar is written as a literal that CycNum::parse reads back.
 */

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "refnc/catalog.hpp"
#include "refnc/chartab.hpp"
#include "refnc/error.hpp"
#include "refnc/graded_series.hpp"
#include "refnc/group.hpp"
#include "refnc/invariants.hpp"
#include "refnc/mckay.hpp"

namespace refnc {

using Json = nlohmann::ordered_json;

inline Json matrix_to_json(const Matrix& m) { return m.to_literals(); }

inline Matrix matrix_from_json(const Json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw ParseError("group json: generator must have " + std::to_string(n) + " rows");
  std::vector<std::vector<CycNum>> rows;
  for (const auto& r : j) {
    if (!r.is_array() || static_cast<int>(r.size()) != n) throw ParseError("group json: row must have " + std::to_string(n) + " entries");
    std::vector<CycNum> row;
    for (const auto& e : r) {
      if (e.is_string()) row.push_back(CycNum::parse(e.get<std::string>()));
      else if (e.is_number_integer()) row.push_back(CycNum(e.get<long>()));
      else throw ParseError("group json: entries must be scalar literals");
    }
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(rows);
}

inline Json group_to_json(const std::string& name, int dim, const std::vector<Matrix>& gens) {
  Json j;
  j["dimension"] = dim;
  j["generators"] = Json::array();
  for (const auto& g : gens) j["generators"].push_back(matrix_to_json(g));
  j["name"] = name;
  return j;
}

inline CatalogGroup group_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("group json: expected an object");
  if (!j.contains("dimension") || !j["dimension"].is_number_integer()) throw ParseError("group json: missing integer \"dimension\"");
  if (!j.contains("generators") || !j["generators"].is_array()) throw ParseError("group json: missing \"generators\" array");
  CatalogGroup g;
  g.dim = j["dimension"].get<int>();
  if (g.dim <= 0) throw ParseError("group json: dimension must be positive");
  for (const auto& m : j["generators"]) g.generators.push_back(matrix_from_json(m, g.dim));
  if (g.generators.empty()) g.generators.push_back(Matrix::identity(static_cast<std::size_t>(g.dim)));
  g.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "input";
  return g;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline Json graph_to_json(const DualGraph& g) {
  Json j;
  j["vertices"] = g.vertices;
  j["edges"] = Json::array();
  for (auto [a, b] : g.edges) j["edges"].push_back({a, b});
  Json self = Json::object();
  for (std::size_t i = 0; i < g.size(); ++i) {
    self[g.vertices[i]] = i < g.self_intersections.size() ? g.self_intersections[i] : -2;
  }
  j["self"] = self;
  if (g.multiplicities) j["multiplicities"] = *g.multiplicities;
  return j;
}

/// Edges may name vertices by index or by label; "self" defaults to -2.
inline DualGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) throw ParseError("graph json: missing \"vertices\" array");
  DualGraph g;
  for (const auto& v : j["vertices"]) g.vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  auto vertex = [&](const Json& v) -> int {
    if (v.is_number_integer()) return v.get<int>();
    const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      if (g.vertices[i] == s) return static_cast<int>(i);
    }
    throw ParseError("graph json: unknown vertex " + s);
  };
  if (j.contains("edges")) {
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2) throw ParseError("graph json: edge must be a pair");
      g.edges.emplace_back(vertex(e[0]), vertex(e[1]));
    }
  }
  g.self_intersections.assign(g.size(), -2);
  if (j.contains("self")) {
    for (const auto& [k, v] : j["self"].items()) g.self_intersections[static_cast<std::size_t>(vertex(Json(k)))] = v.get<long>();
  }
  if (j.contains("multiplicities")) g.multiplicities = j["multiplicities"].get<std::vector<long>>();
  return g;
}

inline Json series_to_json(const GradedSeries& s) { return s.coeffs(); }

inline GradedSeries series_from_json(const Json& j) {
  auto c = j.get<std::vector<std::int64_t>>();
  if (c.empty()) throw ParseError("series json: empty");
  const int cutoff = static_cast<int>(c.size()) - 1;
  return GradedSeries(cutoff, std::move(c));
}

inline Json class_function_to_json(const ClassFunction& f) {
  Json j = Json::array();
  for (const auto& v : f.values) j.push_back(v.str());
  return j;
}

inline Json chartab_to_json(const MatGroup& g, const CharTable& t) {
  Json j;
  j["group"] = g.name;
  j["order"] = g.size();
  j["exponent"] = t.exponent;
  j["classes"] = Json::array();
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    j["classes"].push_back({{"size", g.class_size(c)}, {"representative", g.class_rep(c)}});
  }
  j["dims"] = t.dims;
  j["rows"] = Json::array();
  for (const auto& r : t.rows) j["rows"].push_back(class_function_to_json(r));
  j["trivial"] = t.trivial_index;
  j["det"] = t.det_index;
  return j;
}

inline Json poly_list(const std::vector<MPoly>& ps) {
  Json j = Json::array();
  for (const auto& p : ps) j.push_back(p.str());
  return j;
}

}  // namespace refnc
