#pragma once

#include "qlab/quiver.hpp"

namespace qlab {

namespace detail {

/// Coordinates of a relation element over the ordered path basis of its
/// (source, target, length) component.
inline RatVec relation_coords(const RelationElement& e, const std::vector<Path>& paths) {
  RatVec v(paths.size(), Rat(0));
  for (const auto& t : e.terms) {
    bool found = false;
    for (std::size_t k = 0; k < paths.size(); ++k) {
      if (paths[k] == t.path) {
        v[k] += t.coeff;
        found = true;
        break;
      }
    }
    if (!found) fail(errc::validation_error, "relation path not in path basis");
  }
  return v;
}

inline RelationElement coords_to_relation(const std::vector<Path>& paths, const RatVec& v) {
  RelationElement e;
  for (std::size_t k = 0; k < paths.size(); ++k)
    if (v[k] != 0) e.terms.push_back(RelationTerm{v[k], paths[k]});
  return e;
}

}  // namespace detail

/// Quadratic dual bound quiver: same quiver, relations spanning the orthogonal
/// complement of span(rho) in each k Q_2^{i,j}, paths self-dual. Output basis
/// is the rref-canonical basis of the complement, so duals are unique.
inline BoundQuiver quadratic_dual(const BoundQuiver& bq) {
  const Quiver& q = bq.quiver();
  for (const auto& e : bq.relations())
    if (e.length() != 2)
      fail(errc::not_quadratic,
           "relation of length " + std::to_string(e.length()) + " (need length 2)");
  std::map<std::pair<std::size_t, std::size_t>, std::vector<const RelationElement*>> by_pair;
  for (const auto& e : bq.relations()) by_pair[{e.source(), e.target()}].push_back(&e);

  std::vector<RelationElement> dual;
  for (std::size_t i = 0; i < q.num_vertices(); ++i) {
    for (std::size_t j = 0; j < q.num_vertices(); ++j) {
      std::vector<Path> paths = paths_between(q, i, j, 2);
      if (paths.empty()) continue;
      std::vector<RatVec> rows;
      auto it = by_pair.find({i, j});
      if (it != by_pair.end())
        for (const RelationElement* e : it->second)
          rows.push_back(detail::relation_coords(*e, paths));
      std::vector<RatVec> comp =
          canonical_span(orth_complement(rows, paths.size()), paths.size());
      for (const auto& v : comp) dual.push_back(detail::coords_to_relation(paths, v));
    }
  }
  return BoundQuiver(q, std::move(dual), bq.grade());
}

/// span((rho^perp)^perp) = span(rho), checked per vertex pair by exact rank.
inline bool dual_involution_check(const BoundQuiver& bq) {
  BoundQuiver dd = quadratic_dual(quadratic_dual(bq));
  const Quiver& q = bq.quiver();
  std::map<std::pair<std::size_t, std::size_t>, std::vector<const RelationElement*>> a, b;
  for (const auto& e : bq.relations()) a[{e.source(), e.target()}].push_back(&e);
  for (const auto& e : dd.relations()) b[{e.source(), e.target()}].push_back(&e);
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [k, v] : a) pairs.insert(k);
  for (const auto& [k, v] : b) pairs.insert(k);
  for (const auto& [i, j] : pairs) {
    std::vector<Path> paths = paths_between(q, i, j, 2);
    std::vector<RatVec> ra, rb;
    if (a.count({i, j}))
      for (const RelationElement* e : a.at({i, j}))
        ra.push_back(detail::relation_coords(*e, paths));
    if (b.count({i, j}))
      for (const RelationElement* e : b.at({i, j}))
        rb.push_back(detail::relation_coords(*e, paths));
    if (!same_span(ra, rb, paths.size())) return false;
  }
  return true;
}

}  // namespace qlab
