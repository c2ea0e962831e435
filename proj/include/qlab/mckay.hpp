#pragma once

#include <cmath>
#include <complex>
#include <numeric>

#include "qlab/cover.hpp"

namespace qlab {

// ---------------------------------------------------------------------------
// McKay quivers of Abelian subgroups of SL(m+1, C)

/// Vertex tuple of Z/r1 x ... x Z/rm, encoded "i1,i2,...".
inline std::string abelian_vertex_id(const std::vector<long>& tup) {
  std::string s;
  for (std::size_t k = 0; k < tup.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(tup[k]);
  }
  return s;
}

namespace detail {

inline std::vector<std::vector<long>> abelian_vertices(const std::vector<long>& orders) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur(orders.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t k = orders.size();
    while (k > 0) {
      --k;
      if (++cur[k] < orders[k]) break;
      cur[k] = 0;
      if (k == 0) return out;
    }
    if (orders.empty()) return out;
  }
}

inline std::vector<long> tuple_add(const std::vector<long>& a, const std::vector<long>& b,
                                   const std::vector<long>& orders) {
  std::vector<long> r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    r[k] = (a[k] + b[k]) % orders[k];
    if (r[k] < 0) r[k] += orders[k];
  }
  return r;
}

inline std::string abelian_arrow_name(std::size_t t, std::size_t m, const std::string& vid) {
  // m = 2 keeps the paper's alpha/beta/gamma naming: a, b, c
  if (t == m) return "c[" + vid + "]";
  if (m == 2) return (t == 0 ? "a[" : "b[") + vid + "]";
  return "a" + std::to_string(t + 1) + "[" + vid + "]";
}

}  // namespace detail

/// McKay quiver of Z/r1 x ... x Z/rm embedded in SL(m+1, C): per vertex i one
/// arrow i -> i + e_t for each t and one arrow i -> i - e.
inline Quiver mckay_abelian(const std::vector<long>& orders) {
  if (orders.empty()) fail(errc::invalid_argument, "need at least one cyclic order");
  for (long r : orders)
    if (r < 1) fail(errc::invalid_argument, "cyclic order must be >= 1");
  std::size_t m = orders.size();
  auto tuples = detail::abelian_vertices(orders);
  std::vector<std::string> vertices;
  for (const auto& t : tuples) vertices.push_back(abelian_vertex_id(t));
  std::vector<Arrow> arrows;
  std::vector<long> minus_e(m, -1);
  for (const auto& tup : tuples) {
    std::string vid = abelian_vertex_id(tup);
    for (std::size_t t = 0; t < m; ++t) {
      std::vector<long> e(m, 0);
      e[t] = 1;
      arrows.push_back(Arrow{detail::abelian_arrow_name(t, m, vid), vid,
                             abelian_vertex_id(detail::tuple_add(tup, e, orders))});
    }
    arrows.push_back(Arrow{detail::abelian_arrow_name(m, m, vid), vid,
                           abelian_vertex_id(detail::tuple_add(tup, minus_e, orders))});
  }
  return Quiver(std::move(vertices), std::move(arrows));
}

/// SL(m) -> SL(m+1) embedding on quivers: one new loop at each vertex.
inline Quiver mckay_add_loops(const Quiver& q) {
  std::vector<Arrow> arrows = q.arrows();
  for (const auto& v : q.vertices()) {
    std::string id = "g[" + v + "]";
    while (q.has_arrow(id)) id.insert(id.begin(), 'g');
    arrows.push_back(Arrow{id, v, v});
  }
  return Quiver(q.vertices(), std::move(arrows));
}

// ---------------------------------------------------------------------------
// ADE families Q~(Xi)

enum class XiFamily { A, D, E6, E7, E8 };

inline std::string xi_family_name(XiFamily f) {
  switch (f) {
    case XiFamily::A: return "A";
    case XiFamily::D: return "D";
    case XiFamily::E6: return "E6";
    case XiFamily::E7: return "E7";
    case XiFamily::E8: return "E8";
  }
  return "?";
}

namespace detail {

struct AdeShape {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> ascending;  // arcs i -> j, arrow a[i,j]
};

inline AdeShape ade_shape(XiFamily family, int l) {
  AdeShape s;
  auto vtx = [](int k) { return std::to_string(k); };
  switch (family) {
    case XiFamily::A: {
      if (l < 4) fail(errc::unsupported_family, "A_l supported for l >= 4");
      for (int k = 0; k <= l; ++k) s.vertices.push_back(vtx(k));
      for (int k = 0; k <= l; ++k) s.ascending.emplace_back(vtx(k), vtx((k + 1) % (l + 1)));
      break;
    }
    case XiFamily::D: {
      if (l < 4) fail(errc::unsupported_family, "D_l supported for l >= 4");
      for (int k = 0; k <= l; ++k) s.vertices.push_back(vtx(k));
      s.ascending.emplace_back(vtx(0), vtx(2));
      s.ascending.emplace_back(vtx(1), vtx(2));
      for (int k = 2; k < l - 2; ++k) s.ascending.emplace_back(vtx(k), vtx(k + 1));
      s.ascending.emplace_back(vtx(l - 2), vtx(l - 1));
      s.ascending.emplace_back(vtx(l - 2), vtx(l));
      break;
    }
    case XiFamily::E6: {
      for (int k = 1; k <= 7; ++k) s.vertices.push_back(vtx(k));
      for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}, {6, 7}})
        s.ascending.emplace_back(vtx(a), vtx(b));
      break;
    }
    case XiFamily::E7: {
      for (int k = 0; k <= 7; ++k) s.vertices.push_back(vtx(k));
      for (auto [a, b] :
           std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}})
        s.ascending.emplace_back(vtx(a), vtx(b));
      break;
    }
    case XiFamily::E8: {
      for (int k = 1; k <= 9; ++k) s.vertices.push_back(vtx(k));
      for (auto [a, b] : std::vector<std::pair<int, int>>{
               {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 9}, {3, 8}})
        s.ascending.emplace_back(vtx(a), vtx(b));
      break;
    }
  }
  return s;
}

}  // namespace detail

/// Doubled ADE diagram without loops (the SL(2) McKay quiver): arrows a[i,j]
/// along ascending arcs and b[j,i] back.
inline Quiver mckay_ade_double(XiFamily family, int l) {
  detail::AdeShape s = detail::ade_shape(family, l);
  std::vector<Arrow> arrows;
  for (const auto& [i, j] : s.ascending) {
    arrows.push_back(Arrow{"a[" + i + "," + j + "]", i, j});
    arrows.push_back(Arrow{"b[" + j + "," + i + "]", j, i});
  }
  return Quiver(s.vertices, std::move(arrows));
}

/// Q~(Xi): the doubled diagram with a loop g[i] at each vertex.
inline Quiver mckay_ade(XiFamily family, int l) {
  return mckay_add_loops(mckay_ade_double(family, l));
}

// ---------------------------------------------------------------------------
// Relation families for Q~(s, r)

/// Parameters C(a, b, c): one nonzero rational per vertex and letter;
/// missing entries fall back to the per-letter default.
struct SrParams {
  Rat default_a{1}, default_b{1}, default_c{1};
  std::map<std::string, Rat> a, b, c;

  static SrParams ones() { return {}; }
  static SrParams constant(const Rat& v) {
    SrParams p;
    p.default_a = p.default_b = p.default_c = v;
    return p;
  }

  Rat get(const std::map<std::string, Rat>& m, const Rat& dflt, const std::string& v) const {
    auto it = m.find(v);
    Rat r = (it == m.end()) ? dflt : it->second;
    if (r == 0) fail(errc::parameter_zero, "zero parameter at vertex " + v);
    return r;
  }
  Rat get_a(const std::string& v) const { return get(a, default_a, v); }
  Rat get_b(const std::string& v) const { return get(b, default_b, v); }
  Rat get_c(const std::string& v) const { return get(c, default_c, v); }
};

namespace detail {

struct SrContext {
  long s, r;
  Quiver quiver;
  std::vector<long> orders;

  std::string vid(long x, long y) const {
    return abelian_vertex_id({((x % s) + s) % s, ((y % r) + r) % r});
  }
  std::string a(long x, long y) const { return "a[" + vid(x, y) + "]"; }
  std::string b(long x, long y) const { return "b[" + vid(x, y) + "]"; }
  std::string c(long x, long y) const { return "c[" + vid(x, y) + "]"; }
};

inline SrContext sr_context(long s, long r) {
  if (s < 4 || r < 4)
    fail(errc::size_too_small,
         "rho(s,r) families need s, r >= 4 (groups with a Z/3 or smaller summand are excluded)");
  SrContext ctx;
  ctx.s = s;
  ctx.r = r;
  ctx.orders = {s, r};
  ctx.quiver = mckay_abelian(ctx.orders);
  return ctx;
}

inline RelationElement two_term(const Quiver& q, const Rat& c1, const std::vector<std::string>& p1,
                                const Rat& c2, const std::vector<std::string>& p2) {
  RelationElement e;
  e.terms.push_back(RelationTerm{c1, make_path_ids(q, p1)});
  e.terms.push_back(RelationTerm{c2, make_path_ids(q, p2)});
  return e;
}

inline RelationElement one_term(const Quiver& q, const Rat& c1,
                                const std::vector<std::string>& p1) {
  RelationElement e;
  e.terms.push_back(RelationTerm{c1, make_path_ids(q, p1)});
  return e;
}

}  // namespace detail

/// rho(s, r, C): three zero relations and three commutation relations per
/// vertex; presents the stable 2-translation algebra on Q~(s, r).
inline BoundQuiver relations_sr(long s, long r, const SrParams& params = SrParams::ones()) {
  detail::SrContext ctx = detail::sr_context(s, r);
  const Quiver& q = ctx.quiver;
  std::vector<RelationElement> rels;
  for (long x = 0; x < s; ++x) {
    for (long y = 0; y < r; ++y) {
      std::string v = ctx.vid(x, y);
      // zero family: a a, b b, c c
      rels.push_back(detail::one_term(q, Rat(1), {ctx.a(x, y), ctx.a(x + 1, y)}));
      rels.push_back(detail::one_term(q, Rat(1), {ctx.b(x, y), ctx.b(x, y + 1)}));
      rels.push_back(detail::one_term(q, Rat(1), {ctx.c(x, y), ctx.c(x - 1, y - 1)}));
      // z(c, i, c_i) = c_i b_{i+e1} a_i + a_{i+e2} b_i
      rels.push_back(detail::two_term(q, params.get_c(v), {ctx.a(x, y), ctx.b(x + 1, y)}, Rat(1),
                                      {ctx.b(x, y), ctx.a(x, y + 1)}));
      // z(b, i, b_i) = b_i a_{i-e} c_i + c_{i+e1} a_i
      rels.push_back(detail::two_term(q, params.get_b(v), {ctx.c(x, y), ctx.a(x - 1, y - 1)},
                                      Rat(1), {ctx.a(x, y), ctx.c(x + 1, y)}));
      // z(a, i, a_i) = a_i b_{i-e} c_i + c_{i+e2} b_i
      rels.push_back(detail::two_term(q, params.get_a(v), {ctx.c(x, y), ctx.b(x - 1, y - 1)},
                                      Rat(1), {ctx.b(x, y), ctx.c(x, y + 1)}));
    }
  }
  return BoundQuiver(q, std::move(rels), 3);
}

/// rho^perp(s, r, C): the commutation relations with coefficients -x^{-1};
/// zero relations drop out. Presents the Koszul AS-regular dual.
inline BoundQuiver relations_sr_dual(long s, long r, const SrParams& params = SrParams::ones()) {
  detail::SrContext ctx = detail::sr_context(s, r);
  const Quiver& q = ctx.quiver;
  std::vector<RelationElement> rels;
  for (long x = 0; x < s; ++x) {
    for (long y = 0; y < r; ++y) {
      std::string v = ctx.vid(x, y);
      rels.push_back(detail::two_term(q, -1 / params.get_c(v), {ctx.a(x, y), ctx.b(x + 1, y)},
                                      Rat(1), {ctx.b(x, y), ctx.a(x, y + 1)}));
      rels.push_back(detail::two_term(q, -1 / params.get_b(v), {ctx.c(x, y), ctx.a(x - 1, y - 1)},
                                      Rat(1), {ctx.a(x, y), ctx.c(x + 1, y)}));
      rels.push_back(detail::two_term(q, -1 / params.get_a(v), {ctx.c(x, y), ctx.b(x - 1, y - 1)},
                                      Rat(1), {ctx.b(x, y), ctx.c(x, y + 1)}));
    }
  }
  return BoundQuiver(q, std::move(rels));
}

enum class SliceSide { primal, dual };

/// Parameter-free relations of the 3-level slice Q(s, r) = Z_v Q~(s, r)[0, 2]:
/// the paper's rho(s, r) (commutation coefficients -1) or rho^perp(s, r)
/// (+1 signs, zero relations dropped).
inline BoundQuiver slice_relations_sr(long s, long r, SliceSide side) {
  BoundQuiver base = (side == SliceSide::primal) ? relations_sr(s, r, SrParams::constant(Rat(-1)))
                                                 : relations_sr_dual(s, r, SrParams::constant(Rat(-1)));
  SliceWindow w = z_separated(base, 0, 2);
  return window_slice(w, 0, 3,
                      side == SliceSide::primal ? std::optional<int>(2) : std::nullopt);
}

// ---------------------------------------------------------------------------
// Relation families for Q~(Xi)

/// Parameters C_J: one rational per ascending arrow (C_a), and per vertex a
/// loop parameter c_i plus proportionality parameters b_i (out-degree - 1 of
/// them). Defaults are all ones.
struct XiParams {
  std::map<std::string, Rat> edge;               // by ascending arrow id
  std::map<std::string, Rat> loop;               // c_i by vertex
  std::map<std::string, std::vector<Rat>> prop;  // b-parameters by vertex

  static XiParams ones() { return {}; }

  Rat edge_param(const std::string& arrow_id) const {
    auto it = edge.find(arrow_id);
    Rat r = (it == edge.end()) ? Rat(1) : it->second;
    if (r == 0) fail(errc::parameter_zero, "zero edge parameter for " + arrow_id);
    return r;
  }
  Rat loop_param(const std::string& v) const {
    auto it = loop.find(v);
    Rat r = (it == loop.end()) ? Rat(1) : it->second;
    if (r == 0) fail(errc::parameter_zero, "zero loop parameter at " + v);
    return r;
  }
  Rat prop_param(const std::string& v, std::size_t k) const {
    auto it = prop.find(v);
    Rat r = (it == prop.end() || k >= it->second.size()) ? Rat(1) : it->second[k];
    if (r == 0) fail(errc::parameter_zero, "zero proportionality parameter at " + v);
    return r;
  }
};

struct XiSpec {
  XiFamily family = XiFamily::A;
  int l = 4;  // ignored for E families
  std::set<std::string> socle_kill;  // the paper's J
  XiParams params = XiParams::ones();
};

namespace detail {

struct XiVertexData {
  std::string loop_id;
  // non-loop out-arrows with matching in-arrows, sorted by neighbour index
  std::vector<std::string> mu;    // i -> j_k
  std::vector<std::string> zeta;  // j_k -> i
};

/// Checks the Q~(Xi) shape (one loop per vertex, arrows in symmetric pairs,
/// non-loop out-degree >= 1) and collects the mu/zeta pairs per vertex.
inline std::map<std::string, XiVertexData> xi_vertex_data(const Quiver& q) {
  std::map<std::string, XiVertexData> out;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    const std::string& vid = q.vertices()[v];
    XiVertexData d;
    std::vector<std::pair<std::size_t, std::size_t>> nbrs;  // (target index, arrow)
    for (std::size_t a : q.out_arrows(v)) {
      std::size_t t = q.arrow_target(a);
      if (t == v) {
        if (!d.loop_id.empty())
          fail(errc::unsupported_family, "vertex " + vid + " carries more than one loop");
        d.loop_id = q.arrows()[a].id;
      } else {
        nbrs.emplace_back(t, a);
      }
    }
    if (d.loop_id.empty())
      fail(errc::unsupported_family, "vertex " + vid + " has no loop (not an SL(3) McKay shape)");
    std::sort(nbrs.begin(), nbrs.end());
    for (auto [t, a] : nbrs) {
      // the matching returning arrow t -> v
      std::string back;
      for (std::size_t ia : q.in_arrows(v))
        if (q.arrow_source(ia) == t) {
          if (!back.empty())
            fail(errc::unsupported_family,
                 "parallel arrows between " + vid + " and " + q.vertices()[t]);
          back = q.arrows()[ia].id;
        }
      if (back.empty())
        fail(errc::unsupported_family,
             "arrow " + q.arrows()[a].id + " has no opposite; Q~(Xi) arrows come in pairs");
      d.mu.push_back(q.arrows()[a].id);
      d.zeta.push_back(back);
    }
    if (d.mu.empty())
      fail(errc::unsupported_family, "vertex " + vid + " has no non-loop arrows");
    out[vid] = std::move(d);
  }
  return out;
}

}  // namespace detail

/// rho(Xi, J, C_J) on Q~(Xi): zero paths between distinct endpoints, loop
/// commutations, and the per-vertex U_i (or U_i^- for i in J) family chosen by
/// non-loop out-degree.
inline BoundQuiver relations_xi(const XiSpec& spec) {
  Quiver q = mckay_ade(spec.family, spec.l);
  auto data = detail::xi_vertex_data(q);
  for (const auto& j : spec.socle_kill)
    if (!q.has_vertex(j)) fail(errc::unknown_vertex, "J contains unknown vertex " + j);

  std::vector<RelationElement> rels;
  // rho_p: compositions of two non-loop arrows with distinct endpoints
  for (std::size_t a1 = 0; a1 < q.num_arrows(); ++a1) {
    if (q.arrow_source(a1) == q.arrow_target(a1)) continue;
    for (std::size_t a2 = 0; a2 < q.num_arrows(); ++a2) {
      if (q.arrow_source(a2) == q.arrow_target(a2)) continue;
      if (q.arrow_target(a1) != q.arrow_source(a2)) continue;
      if (q.arrow_source(a1) == q.arrow_target(a2)) continue;
      rels.push_back(
          detail::one_term(q, Rat(1), {q.arrows()[a1].id, q.arrows()[a2].id}));
    }
  }
  // rho_a: loop commutations along each symmetric arrow pair
  for (const Arrow& a : q.arrows()) {
    if (a.id[0] != 'a') continue;
    const std::string& gi = data.at(a.from).loop_id;
    const std::string& gj = data.at(a.to).loop_id;
    std::string back;
    for (const auto& z : data.at(a.from).zeta)
      if (q.arrows()[q.arrow_index(z)].from == a.to) back = z;
    Rat t = spec.params.edge_param(a.id);
    rels.push_back(detail::two_term(q, Rat(1), {gi, a.id}, -t, {a.id, gj}));
    rels.push_back(detail::two_term(q, Rat(1), {gj, back}, Rat(-1), {back, gi}));
  }
  // U families
  for (const auto& [vid, d] : data) {
    std::size_t deg = d.mu.size();
    const std::string& g = d.loop_id;
    auto zm = [&](std::size_t k) { return std::vector<std::string>{d.mu[k], d.zeta[k]}; };
    bool in_j = spec.socle_kill.count(vid) > 0;
    if (!in_j) {
      Rat c = spec.params.loop_param(vid);
      for (std::size_t k = 1; k < deg; ++k) {
        Rat b = spec.params.prop_param(vid, k - 1);
        if (deg == 2)
          rels.push_back(detail::two_term(q, Rat(1), zm(0), -b, zm(k)));
        else
          rels.push_back(detail::two_term(q, b, zm(0), Rat(-1), zm(k)));
      }
      rels.push_back(detail::two_term(q, Rat(1), {g, g}, -c, zm(0)));
    } else {
      rels.push_back(detail::one_term(q, Rat(1), {g, g}));
      for (std::size_t k = 1; k < deg; ++k) {
        Rat b = spec.params.prop_param(vid, k - 1);
        if (deg == 2)
          rels.push_back(detail::two_term(q, Rat(1), zm(0), -b, zm(k)));
        else
          rels.push_back(detail::two_term(q, b, zm(0), Rat(-1), zm(k)));
      }
    }
  }
  return BoundQuiver(std::move(q), std::move(rels), 3);
}

/// rho^perp(Xi, J, C_J): exact orthogonal complements of the primal families.
inline BoundQuiver relations_xi_dual(const XiSpec& spec) {
  Quiver q = mckay_ade(spec.family, spec.l);
  auto data = detail::xi_vertex_data(q);
  for (const auto& j : spec.socle_kill)
    if (!q.has_vertex(j)) fail(errc::unknown_vertex, "J contains unknown vertex " + j);

  std::vector<RelationElement> rels;
  for (const Arrow& a : q.arrows()) {
    if (a.id[0] != 'a') continue;
    const std::string& gi = data.at(a.from).loop_id;
    const std::string& gj = data.at(a.to).loop_id;
    std::string back;
    for (const auto& z : data.at(a.from).zeta)
      if (q.arrows()[q.arrow_index(z)].from == a.to) back = z;
    Rat t = spec.params.edge_param(a.id);
    rels.push_back(detail::two_term(q, t, {gi, a.id}, Rat(1), {a.id, gj}));
    rels.push_back(detail::two_term(q, Rat(1), {gj, back}, Rat(1), {back, gi}));
  }
  for (const auto& [vid, d] : data) {
    std::size_t deg = d.mu.size();
    const std::string& g = d.loop_id;
    auto zm = [&](std::size_t k) { return std::vector<std::string>{d.mu[k], d.zeta[k]}; };
    bool in_j = spec.socle_kill.count(vid) > 0;
    RelationElement e;
    e.terms.push_back(RelationTerm{Rat(1), make_path_ids(q, zm(0))});
    for (std::size_t k = 1; k < deg; ++k) {
      Rat b = spec.params.prop_param(vid, k - 1);
      Rat coeff = (deg == 2) ? 1 / b : b;
      e.terms.push_back(RelationTerm{coeff, make_path_ids(q, zm(k))});
    }
    if (!in_j) {
      Rat c = spec.params.loop_param(vid);
      e.terms.push_back(RelationTerm{c, make_path_ids(q, {g, g})});
    }
    rels.push_back(std::move(e));
  }
  return BoundQuiver(std::move(q), std::move(rels));
}

/// Parameter-free relations of the 3-level slice Q(Xi) = Z_v Q~(Xi)[0, 2].
inline BoundQuiver slice_relations_xi(const XiSpec& spec_in, SliceSide side) {
  XiSpec spec = spec_in;
  spec.params = XiParams::ones();
  BoundQuiver base = (side == SliceSide::primal) ? relations_xi(spec) : relations_xi_dual(spec);
  SliceWindow w = z_separated(base, 0, 2);
  return window_slice(w, 0, 3,
                      side == SliceSide::primal ? std::optional<int>(2) : std::nullopt);
}

// ---------------------------------------------------------------------------
// McKay quivers from character tables

struct CharacterTable {
  std::vector<long> class_sizes;
  std::vector<std::vector<std::complex<double>>> rows;  // one row per irreducible
  std::vector<std::string> names;                       // optional vertex names
};

/// a_{i,j} = < chi_V . chi_i, chi_j > under the class-weighted inner product;
/// the quiver has a_{i,j} arrows i -> j.
inline Quiver mckay_from_characters(const CharacterTable& table,
                                    const std::vector<std::complex<double>>& chi_v,
                                    double tol = 1e-6) {
  std::size_t classes = table.class_sizes.size();
  std::size_t k = table.rows.size();
  if (chi_v.size() != classes)
    fail(errc::invalid_argument, "faithful character has wrong length");
  double order = 0;
  for (long c : table.class_sizes) {
    if (c < 1) fail(errc::invalid_argument, "class sizes must be positive");
    order += static_cast<double>(c);
  }
  for (const auto& row : table.rows)
    if (row.size() != classes) fail(errc::invalid_argument, "ragged character table");
  auto inner = [&](const std::vector<std::complex<double>>& f,
                   const std::vector<std::complex<double>>& g) {
    std::complex<double> s = 0;
    for (std::size_t c = 0; c < classes; ++c)
      s += static_cast<double>(table.class_sizes[c]) * f[c] * std::conj(g[c]);
    return s / order;
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::complex<double> p = inner(table.rows[i], table.rows[j]);
      double expect = (i == j) ? 1.0 : 0.0;
      if (std::abs(p - expect) > tol)
        fail(errc::non_orthonormal_table,
             "rows " + std::to_string(i) + ", " + std::to_string(j) +
                 " are not orthonormal under the class-weighted inner product");
    }
  std::vector<std::string> names = table.names;
  if (names.empty())
    for (std::size_t i = 0; i < k; ++i) names.push_back(std::to_string(i));
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::complex<double>> prod(classes);
    for (std::size_t c = 0; c < classes; ++c) prod[c] = chi_v[c] * table.rows[i][c];
    for (std::size_t j = 0; j < k; ++j) {
      std::complex<double> aij = inner(prod, table.rows[j]);
      double rounded = std::round(aij.real());
      if (std::abs(aij.real() - rounded) > tol || std::abs(aij.imag()) > tol || rounded < -0.5)
        fail(errc::not_integer_multiplicity,
             "V (x) S_" + std::to_string(i) + " has non-integer multiplicity at S_" +
                 std::to_string(j));
      int m = static_cast<int>(rounded);
      for (int copy = 0; copy < m; ++copy)
        arrows.push_back(Arrow{"m(" + names[i] + ">" + names[j] + ")" + std::to_string(copy),
                               names[i], names[j]});
    }
  }
  return Quiver(names, std::move(arrows));
}

inline Quiver mckay_from_characters(const CharacterTable& table, std::size_t faithful_row,
                                    double tol = 1e-6) {
  if (faithful_row >= table.rows.size())
    fail(errc::invalid_argument, "faithful row index out of range");
  return mckay_from_characters(table, table.rows[faithful_row], tol);
}

/// gcd of the signed cycle lengths of the underlying graph; the number of
/// connected components of Z_v Q~ (Prop on separated covers).
inline long cycle_length_gcd(const Quiver& q) {
  std::size_t n = q.num_vertices();
  std::vector<long> pot(n, 0);
  std::vector<char> seen(n, 0);
  long g = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::vector<std::size_t> todo{s};
    while (!todo.empty()) {
      std::size_t v = todo.back();
      todo.pop_back();
      auto relax = [&](std::size_t w, long d) {
        if (!seen[w]) {
          seen[w] = 1;
          pot[w] = d;
          todo.push_back(w);
        } else {
          long diff = d - pot[w];
          if (diff < 0) diff = -diff;
          g = diff == 0 ? g : std::gcd(g, diff);
        }
      };
      for (std::size_t a : q.out_arrows(v)) relax(q.arrow_target(a), pot[v] + 1);
      for (std::size_t a : q.in_arrows(v)) relax(q.arrow_source(a), pot[v] - 1);
    }
  }
  return g;
}

}  // namespace qlab
