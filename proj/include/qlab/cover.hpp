#pragma once

#include "qlab/trivext.hpp"

namespace qlab {

enum class CoverKind { separated, znq };

/// Finite window of an infinite cover. Vertices are "i@t"; arrows carry the
/// level of their source vertex ("a@t"). For separated covers every arrow
/// climbs one level; for Z|_{n-1}Q covers the in-level copies of Q keep their
/// level and only returning arrows climb.
struct SliceWindow {
  CoverKind kind = CoverKind::separated;
  BoundQuiver base;
  int m = 0, l = 0;
  int step = 0;  // tau-orbit period in levels: base grade for separated, 1 for znq
  BoundQuiver window;

  static std::string level_id(const std::string& base_id, int t) {
    return base_id + "@" + std::to_string(t);
  }

  static std::pair<std::string, int> split_level(const std::string& id) {
    auto pos = id.rfind('@');
    if (pos == std::string::npos) fail(errc::invalid_argument, "not a window vertex: " + id);
    return {id.substr(0, pos), std::atoi(id.c_str() + pos + 1)};
  }
};

/// Separated directed quiver window Z_v Q~[m, l]: vertices (i, t), arrows
/// (alpha, t): (i, t) -> (j, t+1), relations zeta[t] whenever both endpoints
/// land inside the window.
inline SliceWindow z_separated(const BoundQuiver& base, int m, int l) {
  if (l < m) fail(errc::invalid_argument, "window bounds reversed");
  const Quiver& q = base.quiver();
  std::vector<std::string> vertices;
  for (int t = m; t <= l; ++t)
    for (const auto& v : q.vertices()) vertices.push_back(SliceWindow::level_id(v, t));
  std::vector<Arrow> arrows;
  for (int t = m; t < l; ++t)
    for (const Arrow& a : q.arrows())
      arrows.push_back(Arrow{SliceWindow::level_id(a.id, t), SliceWindow::level_id(a.from, t),
                             SliceWindow::level_id(a.to, t + 1)});
  Quiver wq(std::move(vertices), std::move(arrows));
  std::vector<RelationElement> rels;
  for (const RelationElement& z : base.relations()) {
    int len = static_cast<int>(z.length());
    for (int t = m; t + len <= l; ++t) {
      RelationElement e;
      for (const RelationTerm& term : z.terms) {
        std::vector<std::string> ids;
        for (std::size_t k = 0; k < term.path.arrows.size(); ++k)
          ids.push_back(
              SliceWindow::level_id(q.arrows()[term.path.arrows[k]].id, t + static_cast<int>(k)));
        e.terms.push_back(RelationTerm{term.coeff, make_path_ids(wq, ids)});
      }
      rels.push_back(std::move(e));
    }
  }
  SliceWindow w;
  w.kind = CoverKind::separated;
  w.base = base;
  w.m = m;
  w.l = l;
  w.step = base.grade().value_or(0);
  w.window = BoundQuiver(std::move(wq), std::move(rels));
  return w;
}

/// Window of Z|_{n-1} Q: one copy of Q per level, consecutive copies joined by
/// the returning arrows of the trivial extension; relations are the lifted
/// rho, rho_0 and rho_M families.
inline SliceWindow znq_cover(const BoundQuiver& base, int t_min, int t_max) {
  if (t_max < t_min) fail(errc::invalid_argument, "window bounds reversed");
  TrivialExtension te = trivial_extension(base);
  const Quiver& qt = te.delta.quiver();
  const std::size_t num_regular = base.quiver().num_arrows();

  std::vector<std::string> vertices;
  for (int t = t_min; t <= t_max; ++t)
    for (const auto& v : qt.vertices()) vertices.push_back(SliceWindow::level_id(v, t));
  std::vector<Arrow> arrows;
  for (int t = t_min; t <= t_max; ++t) {
    for (std::size_t a = 0; a < qt.arrows().size(); ++a) {
      const Arrow& ar = qt.arrows()[a];
      if (a < num_regular) {
        arrows.push_back(Arrow{SliceWindow::level_id(ar.id, t),
                               SliceWindow::level_id(ar.from, t),
                               SliceWindow::level_id(ar.to, t)});
      } else if (t < t_max) {
        arrows.push_back(Arrow{SliceWindow::level_id(ar.id, t),
                               SliceWindow::level_id(ar.from, t),
                               SliceWindow::level_id(ar.to, t + 1)});
      }
    }
  }
  Quiver wq(std::move(vertices), std::move(arrows));

  std::vector<RelationElement> rels;
  for (const RelationElement& z : te.delta.relations()) {
    for (int t = t_min; t <= t_max; ++t) {
      RelationElement e;
      bool ok = true;
      for (const RelationTerm& term : z.terms) {
        std::vector<std::string> ids;
        int cur = t;
        for (std::size_t a : term.path.arrows) {
          ids.push_back(SliceWindow::level_id(qt.arrows()[a].id, cur));
          if (a >= num_regular) ++cur;  // returning arrows climb
        }
        if (cur > t_max) {
          ok = false;
          break;
        }
        for (const auto& id : ids)
          if (!wq.has_arrow(id)) {
            ok = false;
            break;
          }
        if (!ok) break;
        e.terms.push_back(RelationTerm{term.coeff, make_path_ids(wq, ids)});
      }
      if (ok) rels.push_back(std::move(e));
    }
  }
  SliceWindow w;
  w.kind = CoverKind::znq;
  w.base = base;
  w.m = t_min;
  w.l = t_max;
  w.step = 1;
  w.window = BoundQuiver(std::move(wq), std::move(rels));
  return w;
}

/// Full bound subquiver on a vertex subset; the subset must be convex, so a
/// relation either lies wholly inside or has an endpoint outside.
inline BoundQuiver induced_bound_subquiver(const BoundQuiver& big, const std::set<std::string>& keep,
                                           std::optional<int> grade) {
  const Quiver& q = big.quiver();
  std::vector<std::string> vertices;
  for (const auto& v : q.vertices())
    if (keep.count(v)) vertices.push_back(v);
  std::vector<Arrow> arrows;
  for (const Arrow& a : q.arrows())
    if (keep.count(a.from) && keep.count(a.to)) arrows.push_back(a);
  Quiver sub(std::move(vertices), std::move(arrows));
  std::vector<RelationElement> rels;
  for (const RelationElement& e : big.relations()) {
    const std::string& src = q.vertices()[e.source()];
    const std::string& tgt = q.vertices()[e.target()];
    if (!keep.count(src) || !keep.count(tgt)) continue;
    RelationElement moved;
    for (const RelationTerm& term : e.terms) {
      std::vector<std::string> ids;
      std::size_t cur = e.source();
      for (std::size_t a : term.path.arrows) {
        cur = q.arrow_target(a);
        if (!keep.count(q.vertices()[cur]))
          fail(errc::validation_error,
               "relation endpoint inside the subset but path leaves it (subset not convex)");
        ids.push_back(q.arrows()[a].id);
      }
      moved.terms.push_back(RelationTerm{term.coeff, make_path_ids(sub, ids)});
    }
    rels.push_back(std::move(moved));
  }
  return BoundQuiver(std::move(sub), std::move(rels), grade);
}

/// Box slice: levels [at, at + span - 1] of a window, as a bound quiver.
inline BoundQuiver window_slice(const SliceWindow& w, int at, int span,
                                std::optional<int> grade) {
  if (at < w.m || at + span - 1 > w.l)
    fail(errc::window_too_small, "window [" + std::to_string(w.m) + "," + std::to_string(w.l) +
                                     "] does not contain levels [" + std::to_string(at) + "," +
                                     std::to_string(at + span - 1) + "]");
  std::set<std::string> keep;
  for (const auto& v : w.window.quiver().vertices()) {
    auto [base, t] = SliceWindow::split_level(v);
    if (t >= at && t <= at + span - 1) keep.insert(v);
  }
  return induced_bound_subquiver(w.window, keep, grade);
}

/// Complete tau-slice at level `at`: levels [at, at+n] for separated covers of
/// a stable translation quiver with declared grade n+1; the single level copy
/// of Q for Z|_{n-1}Q covers.
inline BoundQuiver complete_tau_slice(const SliceWindow& w, int at) {
  if (w.kind == CoverKind::znq) return window_slice(w, at, 1, w.base.grade());
  if (!w.base.grade() || *w.base.grade() < 1)
    fail(errc::invalid_argument, "separated cover base needs a declared grade (n) to slice");
  int span = *w.base.grade();
  return window_slice(w, at, span, span - 1);
}

/// tau-orbit key of a window vertex: base vertex for znq covers, (base vertex,
/// level mod step) for separated covers.
inline std::string orbit_key(const SliceWindow& w, const std::string& vid) {
  auto [base, t] = SliceWindow::split_level(vid);
  if (w.kind == CoverKind::znq) return base;
  int r = ((t % w.step) + w.step) % w.step;
  return base + "#" + std::to_string(r);
}

/// Complete tau-slice predicate relative to a window: hits each tau-orbit of
/// the window exactly once and is convex in it.
inline bool is_complete_tau_slice(const SliceWindow& w, const std::set<std::string>& s,
                                  std::string* why = nullptr) {
  auto explain = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (w.step <= 0) return explain("window has no tau structure (step 0)");
  std::map<std::string, int> hits;
  for (const auto& v : w.window.quiver().vertices()) hits[orbit_key(w, v)] = 0;
  for (const auto& v : s) {
    if (!w.window.quiver().has_vertex(v)) return explain("vertex not in window: " + v);
    hits[orbit_key(w, v)]++;
  }
  for (const auto& [k, c] : hits)
    if (c != 1) return explain("orbit " + k + " hit " + std::to_string(c) + " times");
  // convex: no path from the set through an outside vertex back into the set
  const Quiver& q = w.window.quiver();
  std::vector<char> fwd(q.num_vertices(), 0), bwd(q.num_vertices(), 0);
  std::vector<std::size_t> todo;
  for (const auto& v : s) {
    fwd[q.vertex_index(v)] = 1;
    todo.push_back(q.vertex_index(v));
  }
  while (!todo.empty()) {
    std::size_t v = todo.back();
    todo.pop_back();
    for (std::size_t a : q.out_arrows(v)) {
      std::size_t u = q.arrow_target(a);
      if (!fwd[u]) {
        fwd[u] = 1;
        todo.push_back(u);
      }
    }
  }
  for (const auto& v : s) {
    bwd[q.vertex_index(v)] = 1;
    todo.push_back(q.vertex_index(v));
  }
  while (!todo.empty()) {
    std::size_t v = todo.back();
    todo.pop_back();
    for (std::size_t a : q.in_arrows(v)) {
      std::size_t u = q.arrow_source(a);
      if (!bwd[u]) {
        bwd[u] = 1;
        todo.push_back(u);
      }
    }
  }
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (fwd[v] && bwd[v] && !s.count(q.vertices()[v]))
      return explain("not convex: " + q.vertices()[v] + " lies between slice vertices");
  return true;
}

/// tau-mutation: remove a source (resp. sink) of the slice and add the next
/// (resp. previous) representative of its tau-orbit; relations restrict from
/// the window.
inline BoundQuiver tau_mutation(const SliceWindow& w, const BoundQuiver& slice,
                                const std::string& vid) {
  if (!slice.quiver().has_vertex(vid))
    fail(errc::unknown_vertex, "vertex '" + vid + "' not in the slice");
  std::size_t v = slice.quiver().vertex_index(vid);
  bool is_source = slice.quiver().in_arrows(v).empty();
  bool is_sink = slice.quiver().out_arrows(v).empty();
  if (!is_source && !is_sink)
    fail(errc::not_a_source, "vertex '" + vid + "' is neither a source nor a sink of the slice");
  auto [base, t] = SliceWindow::split_level(vid);
  int nt = is_source ? t + w.step : t - w.step;
  std::string replacement = SliceWindow::level_id(base, nt);
  if (!w.window.quiver().has_vertex(replacement))
    fail(errc::window_too_small,
         "replacement vertex " + replacement + " not materialized in the window");
  std::set<std::string> s(slice.quiver().vertices().begin(), slice.quiver().vertices().end());
  s.erase(vid);
  s.insert(replacement);
  std::string why;
  if (!is_complete_tau_slice(w, s, &why))
    fail(errc::validation_error, "mutation does not yield a complete tau-slice: " + why);
  return induced_bound_subquiver(w.window, s, slice.grade());
}

}  // namespace qlab
