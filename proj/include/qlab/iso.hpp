#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "qlab/quiver.hpp"

namespace qlab {

namespace detail {

inline int count_arrows_between(const Quiver& q, std::size_t x, std::size_t y) {
  int c = 0;
  for (std::size_t arr : q.out_arrows(x))
    if (q.arrow_target(arr) == y) ++c;
  return c;
}

/// Joint colour refinement of two quivers: colours refined by the multisets of
/// (neighbour colour, multiplicity) both ways, with one shared label table so
/// classes are comparable across the two graphs.
inline std::pair<std::vector<int>, std::vector<int>> refine_colors_joint(const Quiver& a,
                                                                         const Quiver& b) {
  std::vector<int> ca(a.num_vertices(), 0), cb(b.num_vertices(), 0);
  while (true) {
    using Sig = std::tuple<int, std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>;
    auto signature = [](const Quiver& q, const std::vector<int>& col, std::size_t v) -> Sig {
      std::map<int, int> o, i;
      for (std::size_t arr : q.out_arrows(v)) o[col[q.arrow_target(arr)]]++;
      for (std::size_t arr : q.in_arrows(v)) i[col[q.arrow_source(arr)]]++;
      return {col[v], {o.begin(), o.end()}, {i.begin(), i.end()}};
    };
    std::map<Sig, int> labels;
    auto label_of = [&](const Sig& s) {
      auto it = labels.find(s);
      if (it == labels.end()) it = labels.emplace(s, static_cast<int>(labels.size())).first;
      return it->second;
    };
    // collect all signatures first so labels depend only on signature content
    std::vector<Sig> sa, sb;
    for (std::size_t v = 0; v < a.num_vertices(); ++v) sa.push_back(signature(a, ca, v));
    for (std::size_t v = 0; v < b.num_vertices(); ++v) sb.push_back(signature(b, cb, v));
    std::set<Sig> all(sa.begin(), sa.end());
    all.insert(sb.begin(), sb.end());
    for (const Sig& s : all) label_of(s);
    std::vector<int> na(a.num_vertices()), nb(b.num_vertices());
    for (std::size_t v = 0; v < a.num_vertices(); ++v) na[v] = labels.at(sa[v]);
    for (std::size_t v = 0; v < b.num_vertices(); ++v) nb[v] = labels.at(sb[v]);
    if (na == ca && nb == cb) return {ca, cb};
    ca = std::move(na);
    cb = std::move(nb);
  }
}

inline bool extend_isomorphism(const Quiver& a, const Quiver& b, const std::vector<int>& ca,
                               const std::vector<int>& cb, std::vector<long>& map,
                               std::vector<char>& used, std::size_t v) {
  std::size_t n = a.num_vertices();
  if (v == n) return true;
  for (std::size_t w = 0; w < n; ++w) {
    if (used[w] || ca[v] != cb[w]) continue;
    bool ok = count_arrows_between(a, v, v) == count_arrows_between(b, w, w);
    for (std::size_t u = 0; u < v && ok; ++u) {
      std::size_t wu = static_cast<std::size_t>(map[u]);
      if (count_arrows_between(a, v, u) != count_arrows_between(b, w, wu)) ok = false;
      if (ok && count_arrows_between(a, u, v) != count_arrows_between(b, wu, w)) ok = false;
    }
    if (!ok) continue;
    used[w] = 1;
    map[v] = static_cast<long>(w);
    if (extend_isomorphism(a, b, ca, cb, map, used, v + 1)) return true;
    used[w] = 0;
    map[v] = -1;
  }
  return false;
}

}  // namespace detail

/// Directed-multigraph isomorphism via joint colour refinement plus
/// backtracking; returns the vertex map a -> b (by index) or empty if none.
/// Intended for the desk-scale windows and McKay quivers built here.
inline std::vector<long> find_isomorphism(const Quiver& a, const Quiver& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_arrows() != b.num_arrows()) return {};
  auto [ca, cb] = detail::refine_colors_joint(a, b);
  std::multiset<int> ma(ca.begin(), ca.end()), mb(cb.begin(), cb.end());
  if (ma != mb) return {};
  std::vector<long> map(a.num_vertices(), -1);
  std::vector<char> used(a.num_vertices(), 0);
  if (!detail::extend_isomorphism(a, b, ca, cb, map, used, 0)) return {};
  return map;
}

inline bool isomorphic(const Quiver& a, const Quiver& b) {
  if (a.num_vertices() == 0 && b.num_vertices() == 0) return true;
  return !find_isomorphism(a, b).empty();
}

}  // namespace qlab
