#include <catch2/catch_amalgamated.hpp>

#include "qlab/mckay.hpp"
#include "qlab/trivext.hpp"

using namespace qlab;

namespace {

BoundQuiver a3_rad_square() {
  Quiver q({"1", "2", "3"}, {{"alpha", "1", "2"}, {"beta", "2", "3"}});
  RelationElement e;
  e.terms.push_back(RelationTerm{Rat(1), make_path_ids(q, {"alpha", "beta"})});
  return BoundQuiver(q, {e}, 1);
}

Int algebra_dim(const BoundQuiver& bq, int upto) {
  GradedStructure g(bq, upto);
  return g.total_dim();
}

}  // namespace

TEST_CASE("trivial extension of kA3/(beta alpha): frozen oracle values") {
  BoundQuiver lam = a3_rad_square();
  TrivialExtension te = trivial_extension(lam);
  CHECK(te.n == 1);
  // 2 original arrows + one returning arrow per maximal bound path (alpha, beta)
  REQUIRE(te.delta.quiver().num_arrows() == 4);
  CHECK(te.returning.size() == 2);
  // dim Delta = 2 dim Lambda = 10
  CHECK(algebra_dim(te.delta, 2) == 10);
  CHECK(algebra_dim(lam, 1) == 5);

  // relations span {beta.alpha, r_alpha.r_beta, alpha r_alpha - c r_beta beta}:
  // one rank-1 component at (1,3), one at (3,1), one at (2,2) with both paths
  std::map<std::pair<std::size_t, std::size_t>, int> counts;
  for (const auto& e : te.delta.relations()) counts[{e.source(), e.target()}]++;
  CHECK(counts.size() == 3);
  CHECK(counts.at({0, 2}) == 1);  // beta.alpha
  CHECK(counts.at({2, 0}) == 1);  // returning-returning
  CHECK(counts.at({1, 1}) == 1);  // mixed commutation at the middle vertex
  for (const auto& e : te.delta.relations()) {
    if (e.source() == 1 && e.target() == 1) {
      REQUIRE(e.terms.size() == 2);
      CHECK(e.terms[0].coeff != 0);
      CHECK(e.terms[1].coeff != 0);
    }
  }
  // Delta is a stable 1-translation quiver with trivial tau
  auto st = stable_translation_check(te.delta, 1);
  REQUIRE(st.stable);
  CHECK(st.tau_trivial);
}

TEST_CASE("trivial extension of the semisimple point: k[loop]/(loop^2)") {
  Quiver q({"v"}, {});
  BoundQuiver lam(q, {});
  TrivialExtension te = trivial_extension(lam);
  CHECK(te.n == 0);
  REQUIRE(te.delta.quiver().num_arrows() == 1);
  CHECK(te.delta.quiver().arrows()[0].from == "v");
  CHECK(te.delta.quiver().arrows()[0].to == "v");
  REQUIRE(te.delta.relations().size() == 1);
  CHECK(te.delta.relations()[0].length() == 2);
  CHECK(algebra_dim(te.delta, 1) == 2);
}

TEST_CASE("A2 path algebra has a non-quadratic trivial extension") {
  Quiver q({"1", "2"}, {{"alpha", "1", "2"}});
  BoundQuiver lam(q, {});
  try {
    trivial_extension(lam);
    FAIL("expected NonQuadratic");
  } catch (const error& e) {
    CHECK(e.code() == errc::non_quadratic_extension);
  }
}

TEST_CASE("twist flips the sign of the mixed commutation relation") {
  BoundQuiver lam = a3_rad_square();
  TrivialExtension plain = trivial_extension(lam, 1);
  TrivialExtension twisted = trivial_extension(lam, -1);
  auto comm = [&](const TrivialExtension& te) -> Rat {
    for (const auto& e : te.delta.relations())
      if (e.source() == 1 && e.target() == 1) {
        REQUIRE(e.terms.size() == 2);
        return e.terms[0].coeff / e.terms[1].coeff;
      }
    FAIL("no mixed relation");
    return Rat(0);
  };
  CHECK(comm(plain) == -comm(twisted));
}

TEST_CASE("trivial extension of the Kronecker quiver") {
  Quiver q({"1", "2"}, {{"a1", "1", "2"}, {"a2", "1", "2"}});
  BoundQuiver lam(q, {});
  TrivialExtension te = trivial_extension(lam);
  CHECK(te.n == 1);
  CHECK(te.delta.quiver().num_arrows() == 4);
  // dim Delta = 2 dim Lambda = 2 (e1 + e2 + a1 + a2)
  CHECK(algebra_dim(te.delta, 2) == 8);
  auto st = stable_translation_check(te.delta, 1);
  REQUIRE(st.stable);
  CHECK(st.tau_trivial);
  auto [gd, g] = graded_dims(te.delta, 2);
  CHECK(gd.A[1] == IntMatrix{{Int(0), Int(2)}, {Int(2), Int(0)}});
  CHECK(gd.A[2] == IntMatrix::identity(2));
}

TEST_CASE("trivial extension of the tau-slice Q(4,4) doubles the dimension") {
  BoundQuiver slice = slice_relations_sr(4, 4, SliceSide::primal);
  Int lam_dim = algebra_dim(slice, 2);
  CHECK(lam_dim == 192);
  TrivialExtension te = trivial_extension(slice);
  CHECK(te.n == 2);
  CHECK(algebra_dim(te.delta, 3) == 2 * lam_dim);
  auto st = stable_translation_check(te.delta, 2);
  REQUIRE(st.stable);
  // the returning-arrow quiver has the torus shape: in/out degree 3 everywhere
  const Quiver& qt = te.delta.quiver();
  for (std::size_t v = 0; v < qt.num_vertices(); ++v) {
    CHECK(qt.out_arrows(v).size() == 3);
    CHECK(qt.in_arrows(v).size() == 3);
  }
  CHECK(connected_components(qt).size() == 1);
}
