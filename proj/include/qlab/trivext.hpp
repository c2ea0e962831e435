#pragma once

#include "qlab/graded.hpp"

namespace qlab {

/// Returning arrow beta_p: t(p) -> s(p) for a basis element p of the top
/// graded component e_{pt} Lambda_n e_{ps}.
struct ReturningArrow {
  std::string id;
  std::size_t p_source;  // s(p)
  std::size_t p_target;  // t(p)
  std::size_t basis_k;   // index into the (n, p_source, p_target) quotient basis
};

struct TrivialExtension {
  BoundQuiver delta;
  int n = 0;          // grade of the input; delta is (n+1)-properly-graded
  int twist_sign = 1;  // -1 applies nu(alpha) = -alpha to the right DLambda action
  std::vector<ReturningArrow> returning;

  bool is_returning(std::size_t arrow_index, std::size_t num_regular) const {
    return arrow_index >= num_regular;
  }
};

/// Trivial extension Delta = Lambda (+) D(Lambda) as a bound quiver: the
/// returning-arrow quiver with relations the kernel of kQ~_2 -> Delta_2.
/// The kernel splits by returning-arrow count (the map is block-diagonal in
/// that grading), so relations come out as rho, rho_0 and rho_M families.
/// Verifies dim Delta_t = dim Lambda_t + dim Lambda_{n+1-t}; a failure means
/// the extension is not quadratic and raises NonQuadratic.
inline TrivialExtension trivial_extension(const BoundQuiver& bq,
                                          std::optional<int> twist = std::nullopt,
                                          int cap = -1) {
  ProperlyGradedResult pg = is_n_properly_graded(bq, cap);
  if (!pg.yes)
    fail(errc::not_properly_graded, "input is not n-properly-graded for any n");
  const int n = pg.n;
  const Quiver& q = bq.quiver();
  const std::size_t m = q.num_vertices();
  GradedStructure g(bq, std::max(2, n));

  TrivialExtension te;
  te.n = n;
  te.twist_sign = twist.value_or(n % 2 == 0 ? 1 : -1);
  if (te.twist_sign != 1 && te.twist_sign != -1)
    fail(errc::invalid_argument, "twist sign must be +1 or -1");

  // maximal linearly independent set of maximal bound paths: the
  // rref-canonical quotient basis of the top component, per vertex pair
  std::vector<Arrow> arrows = q.arrows();
  const std::size_t num_regular = arrows.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const GradedComponent& top = g.component(n, i, j);
      for (std::size_t k = 0; k < top.dim(); ++k) {
        ReturningArrow r;
        r.id = "r" + std::to_string(te.returning.size());
        r.p_source = i;
        r.p_target = j;
        r.basis_k = k;
        arrows.push_back(Arrow{r.id, q.vertices()[j], q.vertices()[i]});
        te.returning.push_back(std::move(r));
      }
    }
  }
  Quiver qt(q.vertices(), arrows);

  auto returning_of = [&](std::size_t arrow_idx) -> const ReturningArrow* {
    if (arrow_idx < num_regular) return nullptr;
    return &te.returning[arrow_idx - num_regular];
  };

  // coefficient of basis element p in the product (first x, then tail), both
  // living in the original algebra
  auto coeff_on = [&](const Path& x, const Path& tail, std::size_t i, std::size_t j,
                      std::size_t k_p) -> Rat {
    Path prod = compose(x, tail);
    const GradedComponent& c = g.component(static_cast<int>(prod.length()), i, j);
    RatVec v(c.paths.size(), Rat(0));
    v[c.path_pos.at(prod.arrows)] = 1;
    return c.quotient_coords(c.reduce(std::move(v)))[k_p];
  };

  std::vector<RelationElement> relations;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Path> paths2 = paths_between(qt, i, j, 2);
      if (paths2.empty()) continue;
      // split by returning-arrow count
      std::vector<std::vector<std::size_t>> block(3);
      for (std::size_t p = 0; p < paths2.size(); ++p) {
        int cnt = 0;
        for (std::size_t a : paths2[p].arrows)
          if (a >= num_regular) ++cnt;
        block[cnt].push_back(p);
      }
      auto emit_kernel = [&](const std::vector<std::size_t>& cols,
                             const std::vector<RatVec>& images, std::size_t image_dim) {
        if (cols.empty()) return;
        RatMatrix mat(image_dim, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
          for (std::size_t r = 0; r < image_dim; ++r) mat(r, c) = images[c][r];
        auto ker = canonical_span(kernel_basis(mat), cols.size());
        for (const RatVec& v : ker) {
          RelationElement e;
          for (std::size_t c = 0; c < cols.size(); ++c)
            if (v[c] != 0) e.terms.push_back(RelationTerm{v[c], paths2[cols[c]]});
          relations.push_back(std::move(e));
        }
      };

      // block 0: Lambda_1 . Lambda_1 -> Lambda_2
      {
        const GradedComponent& c2 = g.component(2, i, j);
        std::vector<RatVec> images;
        for (std::size_t p : block[0]) {
          Path orig;  // same arrow indices are valid in the original quiver
          orig.source = i;
          orig.target = j;
          orig.arrows = paths2[p].arrows;
          RatVec v(c2.paths.size(), Rat(0));
          v[c2.path_pos.at(orig.arrows)] = 1;
          images.push_back(c2.quotient_coords(c2.reduce(std::move(v))));
        }
        emit_kernel(block[0], images, c2.dim());
      }

      // block 1: one returning arrow; image in (e_i Lambda_{n-1} e_j)^* with
      // coordinates over the quotient basis of component (n-1, j, i)
      if (n >= 1 && !block[1].empty()) {
        const GradedComponent& cd = g.component(n - 1, j, i);
        std::vector<RatVec> images;
        for (std::size_t p : block[1]) {
          std::size_t a1 = paths2[p].arrows[0], a2 = paths2[p].arrows[1];
          RatVec img(cd.dim(), Rat(0));
          if (const ReturningArrow* r2 = returning_of(a2)) {
            // alpha then beta_p: functional x |-> coeff_p(alpha . x), twisted
            Path alpha;  // i -> u in the original quiver
            alpha.source = i;
            alpha.target = q.arrow_target(a1);
            alpha.arrows = {a1};
            for (std::size_t k = 0; k < cd.dim(); ++k) {
              const Path& x = g.basis_path(n - 1, j, i, k);
              img[k] = Rat(te.twist_sign) *
                       coeff_on(x, alpha, r2->p_source, r2->p_target, r2->basis_k);
            }
          } else {
            // beta_p then alpha: functional x |-> coeff_p(x . alpha)
            const ReturningArrow* r1 = returning_of(a1);
            Path alpha;  // u -> j in the original quiver
            alpha.source = qt.arrow_source(a2);
            alpha.target = j;
            alpha.arrows = {a2};
            for (std::size_t k = 0; k < cd.dim(); ++k) {
              const Path& x = g.basis_path(n - 1, j, i, k);
              img[k] = coeff_on(alpha, x, r1->p_source, r1->p_target, r1->basis_k);
            }
          }
          images.push_back(std::move(img));
        }
        emit_kernel(block[1], images, cd.dim());
      } else if (!block[1].empty()) {
        // n = 0: no degree-(n-1) component; mixed products vanish
        std::vector<RatVec> images(block[1].size());
        emit_kernel(block[1], images, 0);
      }

      // block 2: D(Lambda) . D(Lambda) = 0, every such path is a relation
      {
        std::vector<RatVec> images(block[2].size());
        emit_kernel(block[2], images, 0);
      }
    }
  }

  te.delta = BoundQuiver(qt, std::move(relations), n + 1);

  // the generated ideal must reproduce dim Delta_t = dim Lambda_t + dim Lambda_{n+1-t}
  GradedStructure gd(te.delta, n + 2);
  for (int t = 0; t <= n + 2; ++t) {
    Int expected = 0;
    std::size_t mm = m;
    for (std::size_t i = 0; i < mm; ++i)
      for (std::size_t j = 0; j < mm; ++j) {
        if (t <= n) expected += g.component(t, i, j).dim();
        int dualdeg = n + 1 - t;
        if (dualdeg >= 0 && dualdeg <= n) expected += g.component(dualdeg, j, i).dim();
      }
    Int got = 0;
    for (std::size_t i = 0; i < mm; ++i)
      for (std::size_t j = 0; j < mm; ++j) got += gd.component(t, i, j).dim();
    if (got != expected)
      fail(errc::non_quadratic_extension,
           "degree-2 relations do not present the trivial extension: dim disagrees in degree " +
               std::to_string(t) + " (got " + got.str() + ", expected " + expected.str() + ")");
  }
  return te;
}

}  // namespace qlab
