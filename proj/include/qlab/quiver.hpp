#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "qlab/matrix.hpp"

namespace qlab {

struct Arrow {
  std::string id;
  std::string from;
  std::string to;
  bool operator==(const Arrow& o) const = default;
};

/// Finite quiver: ordered vertex list (the coordinate order used by all
/// linear algebra downstream) plus ordered arrow list. Loops and parallel
/// arrows are allowed.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
      : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    index();
  }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }

  bool has_vertex(const std::string& v) const { return vidx_.count(v) > 0; }
  std::size_t vertex_index(const std::string& v) const {
    auto it = vidx_.find(v);
    if (it == vidx_.end()) fail(errc::unknown_vertex, "no vertex '" + v + "'");
    return it->second;
  }
  std::size_t arrow_index(const std::string& a) const {
    auto it = aidx_.find(a);
    if (it == aidx_.end()) fail(errc::validation_error, "no arrow '" + a + "'");
    return it->second;
  }
  bool has_arrow(const std::string& a) const { return aidx_.count(a) > 0; }

  std::size_t arrow_source(std::size_t a) const { return vidx_.at(arrows_[a].from); }
  std::size_t arrow_target(std::size_t a) const { return vidx_.at(arrows_[a].to); }

  /// Out-arrows of a vertex, sorted by arrow id (the lexicographic order that
  /// fixes path enumeration).
  const std::vector<std::size_t>& out_arrows(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& in_arrows(std::size_t v) const { return in_[v]; }

  /// Arrow-count adjacency matrix, entry (j, i) = number of arrows i -> j.
  IntMatrix adjacency() const {
    IntMatrix m(num_vertices(), num_vertices());
    for (const Arrow& a : arrows_) m(vidx_.at(a.to), vidx_.at(a.from)) += 1;
    return m;
  }

  bool operator==(const Quiver& o) const {
    return vertices_ == o.vertices_ && arrows_ == o.arrows_;
  }

 private:
  void index() {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (!vidx_.emplace(vertices_[i], i).second)
        fail(errc::validation_error, "duplicate vertex id '" + vertices_[i] + "'");
    }
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
      const Arrow& ar = arrows_[a];
      if (!aidx_.emplace(ar.id, a).second)
        fail(errc::validation_error, "duplicate arrow id '" + ar.id + "'");
      if (!vidx_.count(ar.from))
        fail(errc::validation_error, "arrow '" + ar.id + "' has unknown source '" + ar.from + "'");
      if (!vidx_.count(ar.to))
        fail(errc::validation_error, "arrow '" + ar.id + "' has unknown target '" + ar.to + "'");
    }
    out_.assign(vertices_.size(), {});
    in_.assign(vertices_.size(), {});
    std::vector<std::size_t> by_id(arrows_.size());
    for (std::size_t a = 0; a < arrows_.size(); ++a) by_id[a] = a;
    std::sort(by_id.begin(), by_id.end(),
              [&](std::size_t x, std::size_t y) { return arrows_[x].id < arrows_[y].id; });
    for (std::size_t a : by_id) {
      out_[vidx_.at(arrows_[a].from)].push_back(a);
      in_[vidx_.at(arrows_[a].to)].push_back(a);
    }
  }

  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, std::size_t> vidx_;
  std::unordered_map<std::string, std::size_t> aidx_;
  std::vector<std::vector<std::size_t>> out_, in_;
};

/// Path stored as arrow indices in application order (source first); the
/// paper's composition notation reads right-to-left, so the written word
/// "alpha beta" is stored [beta, alpha]. Length-0 paths are the vertex
/// idempotents e_i.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  bool operator==(const Path& o) const = default;
};

inline Path trivial_path(std::size_t v) { return Path{v, v, {}}; }

inline Path make_path(const Quiver& q, const std::vector<std::size_t>& arrows) {
  if (arrows.empty()) fail(errc::invalid_argument, "make_path needs arrows; use trivial_path");
  Path p;
  p.arrows = arrows;
  p.source = q.arrow_source(arrows.front());
  p.target = q.arrow_target(arrows.back());
  for (std::size_t k = 0; k + 1 < arrows.size(); ++k)
    if (q.arrow_target(arrows[k]) != q.arrow_source(arrows[k + 1]))
      fail(errc::validation_error, "arrows do not compose at position " + std::to_string(k));
  return p;
}

inline Path make_path_ids(const Quiver& q, const std::vector<std::string>& ids) {
  std::vector<std::size_t> arrows;
  arrows.reserve(ids.size());
  for (const auto& id : ids) arrows.push_back(q.arrow_index(id));
  return make_path(q, arrows);
}

/// Concatenation "first, then second"; the paper's product notation reads the
/// other way around (second * first).
inline Path compose(const Path& first, const Path& then) {
  if (first.target != then.source) fail(errc::validation_error, "paths do not compose");
  Path p;
  p.source = first.source;
  p.target = then.target;
  p.arrows = first.arrows;
  p.arrows.insert(p.arrows.end(), then.arrows.begin(), then.arrows.end());
  return p;
}

/// Lexicographic order on paths by arrow id sequence (application order).
inline int compare_paths(const Quiver& q, const Path& a, const Path& b) {
  std::size_t n = std::min(a.arrows.size(), b.arrows.size());
  for (std::size_t k = 0; k < n; ++k) {
    const std::string& x = q.arrows()[a.arrows[k]].id;
    const std::string& y = q.arrows()[b.arrows[k]].id;
    if (x != y) return x < y ? -1 : 1;
  }
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size() ? -1 : 1;
  if (a.source != b.source) return a.source < b.source ? -1 : 1;
  return 0;
}

struct RelationTerm {
  Rat coeff;
  Path path;
  bool operator==(const RelationTerm& o) const = default;
};

/// Normalized relation element: all terms share length, source and target;
/// paths distinct, coefficients nonzero, terms sorted.
struct RelationElement {
  std::vector<RelationTerm> terms;

  std::size_t source() const { return terms.front().path.source; }
  std::size_t target() const { return terms.front().path.target; }
  std::size_t length() const { return terms.front().path.length(); }
  bool operator==(const RelationElement& o) const = default;
};

inline void validate_relation_element(const Quiver& q, const RelationElement& e) {
  if (e.terms.empty()) fail(errc::validation_error, "empty relation element");
  const Path& p0 = e.terms.front().path;
  if (p0.length() < 2) fail(errc::validation_error, "relation of length < 2");
  for (const auto& t : e.terms) {
    if (t.coeff == 0) fail(errc::validation_error, "zero coefficient in relation element");
    if (t.path.length() != p0.length())
      fail(errc::validation_error, "relation element mixes path lengths");
    if (t.path.source != p0.source)
      fail(errc::validation_error, "relation element mixes sources (not normalized)");
    if (t.path.target != p0.target)
      fail(errc::validation_error, "relation element mixes targets (not normalized)");
  }
  for (std::size_t a = 0; a + 1 < e.terms.size(); ++a)
    for (std::size_t b = a + 1; b < e.terms.size(); ++b)
      if (e.terms[a].path == e.terms[b].path)
        fail(errc::validation_error, "duplicate path in relation element");
  (void)q;
}

inline void sort_relation_terms(const Quiver& q, RelationElement& e) {
  std::sort(e.terms.begin(), e.terms.end(), [&](const RelationTerm& a, const RelationTerm& b) {
    return compare_paths(q, a.path, b.path) < 0;
  });
}

inline int compare_relation_elements(const Quiver& q, const RelationElement& a,
                                     const RelationElement& b) {
  if (a.source() != b.source()) return a.source() < b.source() ? -1 : 1;
  if (a.target() != b.target()) return a.target() < b.target() ? -1 : 1;
  std::size_t n = std::min(a.terms.size(), b.terms.size());
  for (std::size_t k = 0; k < n; ++k) {
    int c = compare_paths(q, a.terms[k].path, b.terms[k].path);
    if (c != 0) return c;
    if (a.terms[k].coeff != b.terms[k].coeff) return a.terms[k].coeff < b.terms[k].coeff ? -1 : 1;
  }
  if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size() ? -1 : 1;
  return 0;
}

/// Bound quiver (Q_0, Q_1, rho) with an optional declared grade bound n
/// (the maximal bound path length for properly-graded instances).
class BoundQuiver {
 public:
  BoundQuiver() = default;
  BoundQuiver(Quiver q, std::vector<RelationElement> relations,
              std::optional<int> grade = std::nullopt)
      : quiver_(std::move(q)), relations_(std::move(relations)), grade_(grade) {
    for (auto& e : relations_) {
      sort_relation_terms(quiver_, e);
      validate_relation_element(quiver_, e);
    }
    std::sort(relations_.begin(), relations_.end(),
              [&](const RelationElement& a, const RelationElement& b) {
                return compare_relation_elements(quiver_, a, b) < 0;
              });
  }

  const Quiver& quiver() const { return quiver_; }
  const std::vector<RelationElement>& relations() const { return relations_; }
  const std::optional<int>& grade() const { return grade_; }

  bool is_quadratic() const {
    for (const auto& e : relations_)
      if (e.length() != 2) return false;
    return true;
  }

  bool operator==(const BoundQuiver& o) const {
    return quiver_ == o.quiver_ && relations_ == o.relations_ && grade_ == o.grade_;
  }

 private:
  Quiver quiver_;
  std::vector<RelationElement> relations_;
  std::optional<int> grade_;
};

/// Split raw homogeneous combinations into source/target-homogeneous
/// components e_j x e_i; duplicate paths are merged, zero components dropped.
inline std::vector<RelationElement> normalize_relations(
    const Quiver& q, const std::vector<std::vector<RelationTerm>>& raw) {
  std::vector<RelationElement> out;
  for (const auto& combo : raw) {
    if (combo.empty()) continue;
    std::size_t len = combo.front().path.length();
    for (const auto& t : combo)
      if (t.path.length() != len)
        fail(errc::non_homogeneous, "raw relation mixes path lengths " + std::to_string(len) +
                                        " and " + std::to_string(t.path.length()));
    std::map<std::pair<std::size_t, std::size_t>, std::vector<RelationTerm>> groups;
    for (const auto& t : combo) groups[{t.path.source, t.path.target}].push_back(t);
    for (auto& [st, terms] : groups) {
      RelationElement e;
      std::sort(terms.begin(), terms.end(), [&](const RelationTerm& a, const RelationTerm& b) {
        return compare_paths(q, a.path, b.path) < 0;
      });
      for (auto& t : terms) {
        if (!e.terms.empty() && e.terms.back().path == t.path)
          e.terms.back().coeff += t.coeff;
        else
          e.terms.push_back(t);
      }
      std::erase_if(e.terms, [](const RelationTerm& t) { return t.coeff == 0; });
      if (!e.terms.empty()) out.push_back(std::move(e));
    }
  }
  return out;
}

/// All paths of length t from i to j, in lexicographic order of the arrow-id
/// sequence. This order is the coordinate system for every linear-algebra
/// computation on path spaces.
inline std::vector<Path> paths_between(const Quiver& q, const std::string& i,
                                       const std::string& j, std::size_t t) {
  std::size_t vi = q.vertex_index(i), vj = q.vertex_index(j);
  std::vector<Path> out;
  if (t == 0) {
    if (vi == vj) out.push_back(trivial_path(vi));
    return out;
  }
  std::vector<std::size_t> stack;
  auto dfs = [&](auto&& self, std::size_t v) -> void {
    if (stack.size() == t) {
      if (v == vj) out.push_back(Path{vi, vj, stack});
      return;
    }
    for (std::size_t a : q.out_arrows(v)) {
      stack.push_back(a);
      self(self, q.arrow_target(a));
      stack.pop_back();
    }
  };
  dfs(dfs, vi);
  return out;
}

inline std::vector<Path> paths_between(const Quiver& q, std::size_t i, std::size_t j,
                                       std::size_t t) {
  return paths_between(q, q.vertices()[i], q.vertices()[j], t);
}

/// Partition by underlying-graph connectivity; components keep the original
/// vertex/arrow order.
inline std::vector<Quiver> connected_components(const Quiver& q) {
  std::size_t n = q.num_vertices();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<std::size_t> todo{s};
    comp[s] = ncomp;
    while (!todo.empty()) {
      std::size_t v = todo.back();
      todo.pop_back();
      auto visit = [&](std::size_t w) {
        if (comp[w] == -1) {
          comp[w] = ncomp;
          todo.push_back(w);
        }
      };
      for (std::size_t a : q.out_arrows(v)) visit(q.arrow_target(a));
      for (std::size_t a : q.in_arrows(v)) visit(q.arrow_source(a));
    }
    ++ncomp;
  }
  std::vector<std::vector<std::string>> verts(ncomp);
  std::vector<std::vector<Arrow>> arrows(ncomp);
  for (std::size_t v = 0; v < n; ++v) verts[comp[v]].push_back(q.vertices()[v]);
  for (const Arrow& a : q.arrows()) arrows[comp[q.vertex_index(a.from)]].push_back(a);
  std::vector<Quiver> out;
  for (int c = 0; c < ncomp; ++c) out.emplace_back(std::move(verts[c]), std::move(arrows[c]));
  return out;
}

/// Components lifted to bound quivers; each relation lands wholly inside one
/// component since its paths are connected.
inline std::vector<BoundQuiver> connected_components(const BoundQuiver& bq) {
  std::vector<Quiver> comps = connected_components(bq.quiver());
  std::vector<BoundQuiver> out;
  for (const Quiver& c : comps) {
    std::vector<RelationElement> rels;
    for (const RelationElement& e : bq.relations()) {
      const std::string& src = bq.quiver().vertices()[e.source()];
      if (!c.has_vertex(src)) continue;
      RelationElement moved;
      for (const auto& t : e.terms) {
        std::vector<std::string> ids;
        for (std::size_t a : t.path.arrows) ids.push_back(bq.quiver().arrows()[a].id);
        moved.terms.push_back(RelationTerm{t.coeff, make_path_ids(c, ids)});
      }
      rels.push_back(std::move(moved));
    }
    out.emplace_back(c, std::move(rels), bq.grade());
  }
  return out;
}

}  // namespace qlab
