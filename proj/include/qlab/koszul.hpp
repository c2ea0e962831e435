#pragma once

#include "qlab/graded.hpp"

namespace qlab {

struct KoszulStep {
  std::vector<int> gen_degrees;  // degrees of the generators of P^t
  std::set<int> kernel_support;  // degrees where ker f_t is nonzero
  bool kernel_zero = false;
};

struct KoszulProfile {
  int p = 0;      // top nonzero degree of the algebra
  int t_max = 0;  // resolution depth computed
  std::vector<KoszulStep> steps;
  int linear_through = -1;  // every step t <= this is generated in degree t
  std::optional<int> q;     // first q with P^{q+1} not generated in degree q+1
  bool q_concentrated = false;  // ker f_q concentrated in degree q + p
  bool resolved_to_zero = false;

  bool koszul_up_to_depth() const { return !q && linear_through == t_max; }
};

namespace detail {

struct ResGenerator {
  std::size_t vertex;
  int degree;
};

// coordinate layout of P_{d,j} for P = (+)_g Lambda e_{v_g} <d_g>
struct ResLayout {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> coords;  // (g, basis k, offset)
  std::map<std::size_t, std::size_t> gen_offset;                          // g -> first coord
  std::size_t dim = 0;
};

inline ResLayout res_layout(const GradedStructure& g, const std::vector<ResGenerator>& gens,
                            int d, std::size_t j) {
  ResLayout lay;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    int t = d - gens[gi].degree;
    if (t < 0 || t > g.t_max()) continue;
    const GradedComponent& c = g.component(t, gens[gi].vertex, j);
    if (c.dim() == 0) continue;
    lay.gen_offset[gi] = lay.dim;
    for (std::size_t k = 0; k < c.dim(); ++k) {
      lay.coords.emplace_back(gi, k, lay.dim);
      ++lay.dim;
    }
  }
  return lay;
}

}  // namespace detail

/// Steps through the minimal graded projective resolution of one simple
/// module, syzygy by syzygy, in exact arithmetic. Modules are graded
/// subspaces of explicit projectives over the finite-dimensional algebra.
class ResolutionWalker {
 public:
  ResolutionWalker(const GradedStructure& g, std::size_t simple)
      : g_(g), m_(g.quiver().num_vertices()) {
    int p = g_.t_max();
    gens_.push_back(detail::ResGenerator{simple, 0});
    last_gen_degrees_ = {0};
    for (int d = 1; d <= p; ++d)
      for (std::size_t j = 0; j < m_; ++j) {
        const GradedComponent& c = g_.component(d, simple, j);
        if (c.dim() == 0) continue;
        std::vector<RatVec> rows;
        for (std::size_t k = 0; k < c.dim(); ++k) {
          RatVec row(c.dim(), Rat(0));
          row[k] = 1;
          rows.push_back(std::move(row));
        }
        comp_[{d, j}] = std::move(rows);
      }
  }

  bool module_zero() const { return comp_.empty(); }

  /// Degrees of the generators of the projective cover chosen last step
  /// (step 0: the simple itself, degree 0).
  const std::vector<int>& last_gen_degrees() const { return last_gen_degrees_; }

  /// Graded dimension of the current module (the syzygy Omega^{step}).
  std::map<std::pair<int, std::size_t>, std::size_t> module_dims() const {
    std::map<std::pair<int, std::size_t>, std::size_t> out;
    for (const auto& [key, rows] : comp_)
      if (!rows.empty()) out[key] = rows.size();
    return out;
  }

  std::set<int> module_support() const {
    std::set<int> s;
    for (const auto& [key, rows] : comp_)
      if (!rows.empty()) s.insert(key.first);
    return s;
  }

  /// dmv of the module stacked over degrees [h, h+n] as one level vector.
  std::vector<Int> level_vector(int h, int n) const {
    std::vector<Int> v(static_cast<std::size_t>(n + 1) * m_, Int(0));
    for (const auto& [key, rows] : comp_) {
      int d = key.first;
      if (d < h || d > h + n) continue;
      v[static_cast<std::size_t>(d - h) * m_ + key.second] = Int(rows.size());
    }
    return v;
  }

  /// One resolution step: choose a minimal projective cover of the current
  /// module and replace the module by the kernel.
  void step() {
    if (comp_.empty()) {
      last_gen_degrees_.clear();
      return;
    }
    const Quiver& q = g_.quiver();
    std::vector<detail::ResGenerator> new_gens;
    std::vector<RatVec> gen_vectors;
    std::vector<std::pair<int, std::size_t>> gen_at;
    std::set<int> degrees;
    for (const auto& [key, rows] : comp_) degrees.insert(key.first);

    for (int d : degrees) {
      for (std::size_t j = 0; j < m_; ++j) {
        auto it = comp_.find({d, j});
        if (it == comp_.end() || it->second.empty()) continue;
        detail::ResLayout lay = detail::res_layout(g_, gens_, d, j);
        // span of Lambda_1 . M_{d-1} inside M_{d, j}
        std::vector<RatVec> radical;
        for (std::size_t jp = 0; jp < m_; ++jp) {
          auto pit = comp_.find({d - 1, jp});
          if (pit == comp_.end()) continue;
          detail::ResLayout prev = detail::res_layout(g_, gens_, d - 1, jp);
          for (std::size_t arr : q.out_arrows(jp)) {
            if (q.arrow_target(arr) != j) continue;
            for (const RatVec& row : pit->second) {
              RatVec img(lay.dim, Rat(0));
              for (const auto& [gi, k, off] : prev.coords) {
                if (row[off] == 0) continue;
                int t = (d - 1) - gens_[gi].degree;
                if (t + 1 > g_.t_max()) continue;  // the algebra vanishes there
                const Path& rep = g_.basis_path(t, gens_[gi].vertex, jp, k);
                Path ext = rep;
                ext.arrows.push_back(arr);
                ext.target = j;
                const GradedComponent& tc = g_.component(t + 1, gens_[gi].vertex, j);
                RatVec v(tc.paths.size(), Rat(0));
                v[tc.path_pos.at(ext.arrows)] = 1;
                RatVec coords = tc.quotient_coords(tc.reduce(std::move(v)));
                auto base = lay.gen_offset.find(gi);
                if (base == lay.gen_offset.end()) continue;
                for (std::size_t kk = 0; kk < coords.size(); ++kk)
                  if (coords[kk] != 0) img[base->second + kk] += row[off] * coords[kk];
              }
              radical.push_back(std::move(img));
            }
          }
        }
        std::vector<RatVec> reducer = canonical_span(radical, lay.dim);
        auto reduce_by = [&](RatVec v) {
          for (const RatVec& r : reducer) {
            std::size_t piv = 0;
            while (piv < r.size() && r[piv] == 0) ++piv;
            if (piv == r.size() || v[piv] == 0) continue;
            Rat f = v[piv] / r[piv];
            for (std::size_t kk = 0; kk < v.size(); ++kk) v[kk] -= f * r[kk];
          }
          return v;
        };
        for (const RatVec& row : it->second) {
          RatVec red = reduce_by(row);
          bool zero = true;
          for (const Rat& x : red)
            if (x != 0) zero = false;
          if (zero) continue;
          new_gens.push_back(detail::ResGenerator{j, d});
          gen_vectors.push_back(row);
          gen_at.emplace_back(d, j);
          reducer.push_back(red);
          reducer = canonical_span(reducer, lay.dim);
        }
      }
    }

    last_gen_degrees_.clear();
    for (const auto& gen : new_gens) last_gen_degrees_.push_back(gen.degree);

    // kernel of P' -> M; P' can outlive M by up to t_max degrees
    std::map<std::pair<int, std::size_t>, std::vector<RatVec>> next;
    int dmin = new_gens.empty() ? 1 : new_gens.front().degree;
    int dtop = dmin - 1;
    for (const auto& gen : new_gens) {
      dmin = std::min(dmin, gen.degree);
      dtop = std::max(dtop, gen.degree + g_.t_max());
    }
    for (int d = dmin; d <= dtop; ++d) {
      for (std::size_t j = 0; j < m_; ++j) {
        detail::ResLayout play = detail::res_layout(g_, new_gens, d, j);
        if (play.dim == 0) continue;
        detail::ResLayout mlay = detail::res_layout(g_, gens_, d, j);
        RatMatrix mat(mlay.dim, play.dim);
        for (const auto& [gp, k, off] : play.coords) {
          int xt = d - new_gens[gp].degree;
          const auto& [wd, wj] = gen_at[gp];
          const RatVec& w = gen_vectors[gp];
          detail::ResLayout wlay = detail::res_layout(g_, gens_, wd, wj);
          for (const auto& [gi, bk, woff] : wlay.coords) {
            if (w[woff] == 0) continue;
            int bt = wd - gens_[gi].degree;
            if (bt + xt > g_.t_max()) continue;  // lands beyond the algebra's top
            RatVec prod = g_.multiply_basis(bt, gens_[gi].vertex, wj, bk, xt, j, k);
            auto base = mlay.gen_offset.find(gi);
            if (base == mlay.gen_offset.end()) {
              for (const Rat& x : prod)
                if (x != 0)
                  fail(errc::invalid_argument, "resolution step: image misses the layout");
              continue;
            }
            for (std::size_t kk = 0; kk < prod.size(); ++kk)
              if (prod[kk] != 0) mat(base->second + kk, off) += w[woff] * prod[kk];
          }
        }
        std::vector<RatVec> ker = canonical_span(kernel_basis(mat), play.dim);
        if (!ker.empty()) next[{d, j}] = std::move(ker);
      }
    }
    gens_ = std::move(new_gens);
    comp_ = std::move(next);
  }

 private:
  const GradedStructure& g_;
  std::size_t m_;
  std::vector<detail::ResGenerator> gens_;
  std::map<std::pair<int, std::size_t>, std::vector<RatVec>> comp_;
  std::vector<int> last_gen_degrees_;
};

/// Minimal graded projective resolution of Lambda_0, one simple at a time.
/// Reports generator degrees per step and detects the almost-Koszul pattern:
/// linear steps through q, then ker f_q concentrated in degree q + p.
inline KoszulProfile koszul_profile(const BoundQuiver& bq, int t_max, int cap = -1) {
  if (cap < 0) cap = default_degree_cap(bq);
  GradedStructure g = GradedStructure::to_vanishing(bq, cap);
  const std::size_t m = bq.quiver().num_vertices();
  int p = g.t_max();
  while (p > 0 && g.degree_is_zero(p)) --p;

  KoszulProfile profile;
  profile.p = p;
  profile.t_max = t_max;
  profile.steps.assign(t_max + 1, KoszulStep{});
  std::vector<bool> reached(t_max + 1, false);

  for (std::size_t simple = 0; simple < m; ++simple) {
    ResolutionWalker walker(g, simple);
    profile.steps[0].gen_degrees.push_back(0);
    for (int dsup : walker.module_support()) profile.steps[0].kernel_support.insert(dsup);
    reached[0] = true;
    for (int t = 1; t <= t_max; ++t) {
      if (walker.module_zero()) break;
      walker.step();
      for (int d : walker.last_gen_degrees()) profile.steps[t].gen_degrees.push_back(d);
      for (int dsup : walker.module_support()) profile.steps[t].kernel_support.insert(dsup);
      if (walker.module_zero()) profile.steps[t].kernel_zero = true;
      reached[t] = true;
    }
    if (walker.module_zero()) profile.resolved_to_zero = true;
  }

  int lin = -1;
  for (int t = 0; t <= t_max && reached[t]; ++t) {
    bool linear = true;
    for (int d : profile.steps[t].gen_degrees)
      if (d != t) linear = false;
    if (!linear) break;
    lin = t;
  }
  profile.linear_through = lin;
  if (lin >= 0 && lin < t_max && reached[lin + 1] &&
      !profile.steps[lin + 1].gen_degrees.empty()) {
    profile.q = lin;
    const auto& support = profile.steps[lin].kernel_support;
    profile.q_concentrated = support.size() == 1 && *support.begin() == lin + p;
  }
  return profile;
}

/// Level vectors ldmv Omega^s(Lambda_0 e_i) for s = 0..s_max, each stacked
/// over degrees [s, s+n]; the independent syzygy route for Eq-style checks
/// against Loewy matrix powers.
inline std::vector<std::vector<Int>> syzygy_level_vectors(const BoundQuiver& bq,
                                                          std::size_t simple, int s_max, int n,
                                                          int cap = -1) {
  if (cap < 0) cap = default_degree_cap(bq);
  GradedStructure g = GradedStructure::to_vanishing(bq, cap);
  std::vector<std::vector<Int>> out;
  ResolutionWalker walker(g, simple);
  // Omega^0 = the simple itself; the fresh walker already holds Omega^1 = rad
  std::vector<Int> v0(static_cast<std::size_t>(n + 1) * bq.quiver().num_vertices(), Int(0));
  v0[simple] = 1;
  out.push_back(std::move(v0));
  for (int s = 1; s <= s_max; ++s) {
    out.push_back(walker.level_vector(s, n));
    walker.step();
  }
  return out;
}

}  // namespace qlab
