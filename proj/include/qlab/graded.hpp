#pragma once

#include <cstdlib>
#include <map>
#include <set>
#include <tuple>

#include "qlab/quiver.hpp"

namespace qlab {

/// One graded component e_j Lambda_t e_i: the ordered path basis of kQ_t^{i,j},
/// the rref of the ideal piece (rho) cap kQ_t^{i,j}, and the surviving quotient
/// basis (non-pivot paths).
struct GradedComponent {
  std::vector<Path> paths;
  std::map<std::vector<std::size_t>, std::size_t> path_pos;  // arrow sequence -> coordinate
  std::vector<RatVec> ideal_rows;                            // rref rows
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> basis_cols;  // quotient basis = images of these paths

  std::size_t dim() const { return basis_cols.size(); }

  /// Canonical form mod the ideal: eliminate pivot coordinates.
  RatVec reduce(RatVec v) const {
    for (std::size_t r = 0; r < ideal_rows.size(); ++r) {
      std::size_t c = pivot_cols[r];
      if (v[c] == 0) continue;
      Rat f = v[c];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * ideal_rows[r][k];
    }
    return v;
  }

  /// Quotient coordinates of a reduced vector.
  RatVec quotient_coords(const RatVec& reduced) const {
    RatVec out(basis_cols.size());
    for (std::size_t k = 0; k < basis_cols.size(); ++k) out[k] = reduced[basis_cols[k]];
    return out;
  }
};

struct GradedDims {
  std::vector<IntMatrix> A;  // A[t](j, i) = dim e_j Lambda_t e_i

  int t_max() const { return static_cast<int>(A.size()) - 1; }
  std::vector<Int> hilbert(std::size_t i) const {
    std::vector<Int> h;
    for (const auto& m : A) {
      Int s = 0;
      for (std::size_t j = 0; j < m.rows(); ++j) s += m(j, i);
      h.push_back(s);
    }
    return h;
  }
};

/// Graded structure of Lambda = kQ/(rho) up to a degree bound: all components,
/// their ideal rrefs and quotient bases, plus multiplication of basis elements.
/// This is the working form of the spec's AlgebraBasis.
class GradedStructure {
 public:
  GradedStructure(const BoundQuiver& bq, int t_max) : bq_(bq) { extend(t_max); }

  /// Compute degrees until Lambda_t = 0; throws DegreeCapExceeded if the
  /// algebra is still alive at the cap.
  static GradedStructure to_vanishing(const BoundQuiver& bq, int cap) {
    GradedStructure g(bq, 0);
    int t = 0;
    while (true) {
      bool zero = true;
      std::size_t m = bq.quiver().num_vertices();
      for (std::size_t i = 0; i < m && zero; ++i)
        for (std::size_t j = 0; j < m && zero; ++j)
          if (g.component(t, i, j).dim() > 0) zero = false;
      if (zero) break;
      ++t;
      if (t > cap)
        fail(errc::degree_cap_exceeded,
             "algebra still nonzero in degree " + std::to_string(cap) +
                 " (cap; is the ideal admissible?)");
      g.extend(t);
    }
    return g;
  }

  const BoundQuiver& bound_quiver() const { return bq_; }
  const Quiver& quiver() const { return bq_.quiver(); }
  int t_max() const { return t_max_; }

  const GradedComponent& component(int t, std::size_t i, std::size_t j) const {
    auto it = comps_.find({t, i, j});
    if (it == comps_.end()) fail(errc::invalid_argument, "component beyond computed degree");
    return it->second;
  }

  IntMatrix dims(int t) const {
    std::size_t m = quiver().num_vertices();
    IntMatrix a(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) a(j, i) = component(t, i, j).dim();
    return a;
  }

  GradedDims graded_dims() const {
    GradedDims gd;
    for (int t = 0; t <= t_max_; ++t) gd.A.push_back(dims(t));
    return gd;
  }

  Int total_dim() const {
    Int s = 0;
    std::size_t m = quiver().num_vertices();
    for (int t = 0; t <= t_max_; ++t)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) s += component(t, i, j).dim();
    return s;
  }

  bool degree_is_zero(int t) const {
    std::size_t m = quiver().num_vertices();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (component(t, i, j).dim() > 0) return false;
    return true;
  }

  /// Image of a path in the quotient, as quotient coordinates of its component.
  /// Empty component -> empty vector; zero image -> all-zero vector.
  RatVec path_image(const Path& p) const {
    const GradedComponent& c = component(static_cast<int>(p.length()), p.source, p.target);
    auto it = c.path_pos.find(p.arrows);
    if (it == c.path_pos.end()) fail(errc::invalid_argument, "path not in component basis");
    RatVec v(c.paths.size(), Rat(0));
    v[it->second] = 1;
    return c.quotient_coords(c.reduce(std::move(v)));
  }

  bool is_bound(const Path& p) const {
    if (static_cast<int>(p.length()) > t_max_) return false;
    for (const Rat& x : path_image(p))
      if (x != 0) return true;
    return false;
  }

  /// Representative path of a basis element (t, i, j, k).
  const Path& basis_path(int t, std::size_t i, std::size_t j, std::size_t k) const {
    const GradedComponent& c = component(t, i, j);
    return c.paths[c.basis_cols[k]];
  }

  /// Product of basis elements: (first b1: i->j in degree t1) then (b2: j->h in
  /// degree t2); returns quotient coordinates in component (t1+t2, i, h).
  RatVec multiply_basis(int t1, std::size_t i, std::size_t j, std::size_t k1, int t2,
                        std::size_t h, std::size_t k2) const {
    const Path& p1 = basis_path(t1, i, j, k1);
    const Path& p2 = basis_path(t2, j, h, k2);
    Path prod = compose(p1, p2);
    const GradedComponent& c = component(t1 + t2, i, h);
    RatVec v(c.paths.size(), Rat(0));
    v[c.path_pos.at(prod.arrows)] = 1;
    return c.quotient_coords(c.reduce(std::move(v)));
  }

 private:
  void extend(int new_t_max) {
    const Quiver& q = quiver();
    std::size_t m = q.num_vertices();
    for (int t = (comps_.empty() ? 0 : t_max_ + 1); t <= new_t_max; ++t) {
      // generators of (rho) cap kQ_t: u . z . w with len(w) + len(z) + len(u) = t
      std::map<std::pair<std::size_t, std::size_t>, std::vector<RatVec>> spans;
      std::map<std::pair<std::size_t, std::size_t>, std::vector<Path>> paths;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          auto ps = paths_between(q, i, j, static_cast<std::size_t>(t));
          if (!ps.empty()) paths[{i, j}] = std::move(ps);
        }
      for (const RelationElement& z : bq_.relations()) {
        int len = static_cast<int>(z.length());
        if (len > t) continue;
        for (int pre = 0; pre + len <= t; ++pre) {
          int post = t - len - pre;
          std::vector<Path> ws = paths_ending_at(z.source(), pre);
          std::vector<Path> us = paths_starting_at(z.target(), post);
          for (const Path& w : ws) {
            for (const Path& u : us) {
              auto key = std::make_pair(w.source, u.target);
              auto pit = paths.find(key);
              if (pit == paths.end()) continue;
              const auto& basis = pit->second;
              RatVec vec(basis.size(), Rat(0));
              for (const RelationTerm& term : z.terms) {
                Path full = w;
                full.arrows.insert(full.arrows.end(), term.path.arrows.begin(),
                                   term.path.arrows.end());
                full.arrows.insert(full.arrows.end(), u.arrows.begin(), u.arrows.end());
                full.target = u.target;
                std::size_t pos = find_path_pos(basis, full);
                vec[pos] += term.coeff;
              }
              spans[key].push_back(std::move(vec));
            }
          }
        }
      }
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          GradedComponent c;
          auto pit = paths.find({i, j});
          if (pit != paths.end()) c.paths = std::move(pit->second);
          for (std::size_t k = 0; k < c.paths.size(); ++k) c.path_pos[c.paths[k].arrows] = k;
          auto sit = spans.find({i, j});
          if (sit != spans.end() && !sit->second.empty()) {
            RrefResult rr = rref(RatMatrix::from_rows(sit->second, c.paths.size()));
            for (std::size_t r = 0; r < rr.rank; ++r) {
              RatVec row(c.paths.size());
              for (std::size_t col = 0; col < c.paths.size(); ++col) row[col] = rr.reduced(r, col);
              c.ideal_rows.push_back(std::move(row));
            }
            c.pivot_cols = rr.pivot_cols;
          }
          std::set<std::size_t> piv(c.pivot_cols.begin(), c.pivot_cols.end());
          for (std::size_t k = 0; k < c.paths.size(); ++k)
            if (!piv.count(k)) c.basis_cols.push_back(k);
          comps_[{t, i, j}] = std::move(c);
        }
      }
    }
    t_max_ = std::max(t_max_, new_t_max);
  }

  std::vector<Path> paths_starting_at(std::size_t v, int len) const {
    std::vector<Path> out;
    std::vector<std::size_t> stack;
    const Quiver& q = quiver();
    auto dfs = [&](auto&& self, std::size_t cur) -> void {
      if (static_cast<int>(stack.size()) == len) {
        out.push_back(Path{v, cur, stack});
        return;
      }
      for (std::size_t a : q.out_arrows(cur)) {
        stack.push_back(a);
        self(self, q.arrow_target(a));
        stack.pop_back();
      }
    };
    dfs(dfs, v);
    return out;
  }

  std::vector<Path> paths_ending_at(std::size_t v, int len) const {
    std::vector<Path> out;
    std::vector<std::size_t> stack;  // reversed
    const Quiver& q = quiver();
    auto dfs = [&](auto&& self, std::size_t cur) -> void {
      if (static_cast<int>(stack.size()) == len) {
        Path p;
        p.source = cur;
        p.target = v;
        p.arrows.assign(stack.rbegin(), stack.rend());
        out.push_back(std::move(p));
        return;
      }
      for (std::size_t a : q.in_arrows(cur)) {
        stack.push_back(a);
        self(self, q.arrow_source(a));
        stack.pop_back();
      }
    };
    dfs(dfs, v);
    return out;
  }

  static std::size_t find_path_pos(const std::vector<Path>& basis, const Path& p) {
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k].arrows == p.arrows) return k;
    fail(errc::invalid_argument, "composed path missing from path basis");
  }

  BoundQuiver bq_;
  int t_max_ = 0;
  std::map<std::tuple<int, std::size_t, std::size_t>, GradedComponent> comps_;
};

inline std::pair<GradedDims, GradedStructure> graded_dims(const BoundQuiver& bq, int t_max) {
  GradedStructure g(bq, t_max);
  return {g.graded_dims(), std::move(g)};
}

constexpr int kDefaultDegreeCapSlack = 2;

inline int default_degree_cap(const BoundQuiver& bq) {
  if (const char* env = std::getenv("QLAB_DEGREE_CAP")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return static_cast<int>(bq.quiver().num_arrows()) + kDefaultDegreeCapSlack;
}

struct ProperlyGradedResult {
  bool yes = false;
  int n = -1;
  // two maximal bound paths of different lengths when the check fails
  std::optional<std::pair<Path, Path>> witness;
};

/// All maximal bound paths have the same length n? A bound path is maximal
/// when no one-arrow extension on either side stays bound.
inline ProperlyGradedResult is_n_properly_graded(const BoundQuiver& bq, int cap = -1) {
  if (cap < 0) cap = default_degree_cap(bq);
  GradedStructure g = GradedStructure::to_vanishing(bq, cap);
  const Quiver& q = bq.quiver();

  std::set<std::vector<std::size_t>> bound_nontrivial;  // keyed by arrow sequence
  std::vector<Path> all_bound;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) all_bound.push_back(trivial_path(v));
  std::size_t head = 0;
  while (head < all_bound.size()) {
    Path p = all_bound[head++];
    if (static_cast<int>(p.length()) + 1 > g.t_max()) continue;
    for (std::size_t a : q.out_arrows(p.target)) {
      Path ext = p;
      ext.arrows.push_back(a);
      ext.target = q.arrow_target(a);
      if (g.is_bound(ext)) {
        bound_nontrivial.insert(ext.arrows);
        all_bound.push_back(std::move(ext));
      }
    }
  }

  auto has_bound_append = [&](const Path& p) {
    for (std::size_t a : q.out_arrows(p.target)) {
      std::vector<std::size_t> seq = p.arrows;
      seq.push_back(a);
      if (bound_nontrivial.count(seq)) return true;
    }
    return false;
  };
  auto has_bound_prepend = [&](const Path& p) {
    for (std::size_t a : q.in_arrows(p.source)) {
      std::vector<std::size_t> seq;
      seq.reserve(p.arrows.size() + 1);
      seq.push_back(a);
      seq.insert(seq.end(), p.arrows.begin(), p.arrows.end());
      if (bound_nontrivial.count(seq)) return true;
    }
    return false;
  };

  ProperlyGradedResult res;
  std::optional<Path> sample;
  for (const Path& p : all_bound) {
    if (has_bound_append(p) || has_bound_prepend(p)) continue;
    if (!sample) {
      sample = p;
      res.n = static_cast<int>(p.length());
      continue;
    }
    if (static_cast<int>(p.length()) != res.n) {
      res.yes = false;
      res.witness = std::make_pair(*sample, p);
      return res;
    }
  }
  res.yes = sample.has_value();
  return res;
}

struct NicelyGradedResult {
  bool yes = false;
  std::map<std::string, long> potential;
  std::vector<std::string> cycle_witness;  // arrow ids of a closed walk with nonzero signed length
};

/// BFS potential assignment d with d(target) = d(source) + 1 along every
/// arrow; fails exactly when some cycle has nonzero signed length.
inline NicelyGradedResult is_nicely_graded(const Quiver& q) {
  NicelyGradedResult res;
  std::size_t n = q.num_vertices();
  std::vector<long> d(n, 0);
  std::vector<bool> seen(n, false);
  // parent chain for witness reconstruction
  std::vector<std::size_t> parent_arrow(n, SIZE_MAX);
  std::vector<int> parent_dir(n, 0);
  std::vector<std::size_t> parent_vertex(n, SIZE_MAX);

  auto walk_to_root = [&](std::size_t v) {
    std::vector<std::pair<std::size_t, int>> chain;  // (arrow, dir)
    while (parent_vertex[v] != SIZE_MAX) {
      chain.emplace_back(parent_arrow[v], parent_dir[v]);
      v = parent_vertex[v];
    }
    return chain;
  };

  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    d[s] = 0;
    std::vector<std::size_t> todo{s};
    while (!todo.empty()) {
      std::size_t v = todo.back();
      todo.pop_back();
      auto relax = [&](std::size_t a, std::size_t w, int dir) -> bool {
        long dw = d[v] + dir;
        if (!seen[w]) {
          seen[w] = true;
          d[w] = dw;
          parent_vertex[w] = v;
          parent_arrow[w] = a;
          parent_dir[w] = dir;
          todo.push_back(w);
          return true;
        }
        if (d[w] != dw) {
          // closed walk: root..v, the offending arrow, then w..root reversed
          auto cv = walk_to_root(v);
          auto cw = walk_to_root(w);
          std::vector<std::string> ids;
          for (auto it = cv.rbegin(); it != cv.rend(); ++it)
            ids.push_back(q.arrows()[it->first].id);
          ids.push_back(q.arrows()[a].id);
          for (auto& [arr, dir2] : cw) ids.push_back(q.arrows()[arr].id);
          res.cycle_witness = std::move(ids);
          return false;
        }
        return true;
      };
      for (std::size_t a : q.out_arrows(v))
        if (!relax(a, q.arrow_target(a), +1)) return res;
      for (std::size_t a : q.in_arrows(v))
        if (!relax(a, q.arrow_source(a), -1)) return res;
    }
  }
  res.yes = true;
  for (std::size_t v = 0; v < n; ++v) res.potential[q.vertices()[v]] = d[v];
  return res;
}

struct StableTranslationResult {
  bool stable = false;
  std::vector<std::size_t> tau;  // tau[i] = j with dim e_j Lambda_{n+1} e_i = 1
  bool tau_trivial = false;
  std::string reason;
};

/// Bound quiver of a graded self-injective algebra of Loewy length n+2:
/// Lambda_{n+2} = 0, A_{n+1} a permutation P, and A_t = (P A_{n+1-t})^T.
inline StableTranslationResult stable_translation_check(const BoundQuiver& bq, int n) {
  StableTranslationResult res;
  GradedStructure g(bq, n + 2);
  GradedDims gd = g.graded_dims();
  if (!gd.A[n + 2].is_zero()) {
    res.reason = "Lambda_" + std::to_string(n + 2) + " != 0";
    return res;
  }
  const IntMatrix& p = gd.A[n + 1];
  if (!p.is_permutation()) {
    res.reason = "A_" + std::to_string(n + 1) + " is not a permutation matrix";
    return res;
  }
  for (int t = 0; t <= n + 1; ++t) {
    if (!(gd.A[t] == (p * gd.A[n + 1 - t]).transpose())) {
      res.reason = "pairing symmetry fails at degree " + std::to_string(t);
      return res;
    }
  }
  res.stable = true;
  std::size_t m = p.rows();
  res.tau.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (p(j, i) == 1) res.tau[i] = j;
  res.tau_trivial = true;
  for (std::size_t i = 0; i < m; ++i)
    if (res.tau[i] != i) res.tau_trivial = false;
  return res;
}

}  // namespace qlab
