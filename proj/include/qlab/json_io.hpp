#pragma once

#include <json.hpp>

#include <string>

#include "qlab/quiver.hpp"

namespace qlab {

using json = nlohmann::json;

/// Canonical JSON form of a bound quiver. Keys are emitted sorted (nlohmann
/// default), fractions are decimal-free strings, paths are arrow-id arrays in
/// application order (source to target). Writer output is byte-stable.
inline json bound_quiver_to_json(const BoundQuiver& bq) {
  const Quiver& q = bq.quiver();
  json j;
  j["vertices"] = q.vertices();
  json arrows = json::array();
  for (const Arrow& a : q.arrows())
    arrows.push_back(json{{"id", a.id}, {"from", a.from}, {"to", a.to}});
  j["arrows"] = std::move(arrows);
  json rels = json::array();
  for (const RelationElement& e : bq.relations()) {
    json el = json::array();
    for (const RelationTerm& t : e.terms) {
      json ids = json::array();
      for (std::size_t a : t.path.arrows) ids.push_back(q.arrows()[a].id);
      el.push_back(json{{"coeff", rat_to_string(t.coeff)}, {"path", std::move(ids)}});
    }
    rels.push_back(std::move(el));
  }
  j["relations"] = std::move(rels);
  if (bq.grade()) j["n"] = *bq.grade();
  return j;
}

inline std::string serialize_bound_quiver(const BoundQuiver& bq) {
  return bound_quiver_to_json(bq).dump(2) + "\n";
}

inline BoundQuiver bound_quiver_from_json(const json& j) {
  if (!j.is_object()) fail(errc::parse_error, "top level is not an object");
  for (const char* key : {"vertices", "arrows", "relations"})
    if (!j.contains(key)) fail(errc::parse_error, std::string("missing key '") + key + "'");
  if (!j["vertices"].is_array()) fail(errc::parse_error, "'vertices' is not an array");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) fail(errc::parse_error, "vertex id is not a string");
    vertices.push_back(v.get<std::string>());
  }
  if (!j["arrows"].is_array()) fail(errc::parse_error, "'arrows' is not an array");
  std::vector<Arrow> arrows;
  for (const auto& a : j["arrows"]) {
    if (!a.is_object() || !a.contains("id") || !a.contains("from") || !a.contains("to"))
      fail(errc::parse_error, "arrow entry needs 'id', 'from', 'to'");
    arrows.push_back(Arrow{a["id"].get<std::string>(), a["from"].get<std::string>(),
                           a["to"].get<std::string>()});
  }
  Quiver q(std::move(vertices), std::move(arrows));
  if (!j["relations"].is_array()) fail(errc::parse_error, "'relations' is not an array");
  std::vector<RelationElement> rels;
  for (const auto& el : j["relations"]) {
    if (!el.is_array() || el.empty())
      fail(errc::parse_error, "relation element is not a nonempty array");
    RelationElement e;
    for (const auto& term : el) {
      if (!term.is_object() || !term.contains("coeff") || !term.contains("path"))
        fail(errc::parse_error, "relation term needs 'coeff' and 'path'");
      Rat c = rat_from_string(term["coeff"].get<std::string>());
      std::vector<std::string> ids;
      for (const auto& id : term["path"]) {
        if (!id.is_string()) fail(errc::parse_error, "path entry is not a string");
        ids.push_back(id.get<std::string>());
      }
      if (ids.empty()) fail(errc::validation_error, "empty path in relation");
      for (const auto& id : ids)
        if (!q.has_arrow(id)) fail(errc::validation_error, "relation uses unknown arrow '" + id + "'");
      e.terms.push_back(RelationTerm{c, make_path_ids(q, ids)});
    }
    rels.push_back(std::move(e));
  }
  std::optional<int> grade;
  if (j.contains("n")) {
    if (!j["n"].is_number_integer()) fail(errc::parse_error, "'n' is not an integer");
    grade = j["n"].get<int>();
  }
  return BoundQuiver(std::move(q), std::move(rels), grade);
}

inline BoundQuiver parse_bound_quiver(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(errc::parse_error, e.what());
  }
  // Documents produced by cover/slice commands wrap the quiver.
  if (j.is_object() && j.contains("quiver") && !j.contains("vertices"))
    return bound_quiver_from_json(j["quiver"]);
  return bound_quiver_from_json(j);
}

}  // namespace qlab
