#include <catch2/catch_amalgamated.hpp>

#include "qlab/dual.hpp"
#include "qlab/koszul.hpp"
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

BoundQuiver an_rad_square(int vertices) {
  std::vector<std::string> v;
  std::vector<Arrow> a;
  for (int k = 1; k <= vertices; ++k) v.push_back(std::to_string(k));
  for (int k = 1; k < vertices; ++k)
    a.push_back(Arrow{"x" + std::to_string(k), std::to_string(k), std::to_string(k + 1)});
  Quiver q(v, a);
  std::vector<RelationElement> rels;
  for (int k = 1; k + 1 < vertices; ++k) {
    RelationElement e;
    e.terms.push_back(
        RelationTerm{Rat(1), make_path_ids(q, {"x" + std::to_string(k), "x" + std::to_string(k + 1)})});
    rels.push_back(e);
  }
  return BoundQuiver(q, rels, 1);
}

}  // namespace

TEST_CASE("Delta(kA3/rad^2): (2,2)-pattern, ker f_2 concentrated in degree 4") {
  TrivialExtension te = trivial_extension(a3_rad_square());
  KoszulProfile prof = koszul_profile(te.delta, 6);
  CHECK(prof.p == 2);
  CHECK(prof.linear_through == 2);
  REQUIRE(prof.q.has_value());
  CHECK(*prof.q == 2);
  CHECK(prof.q_concentrated);
}

TEST_CASE("Lambda~(4,4) resolves linearly through depth 3") {
  BoundQuiver bq = relations_sr(4, 4);
  KoszulProfile prof = koszul_profile(bq, 3);
  CHECK(prof.p == 3);
  CHECK(prof.linear_through == 3);
  CHECK(!prof.q.has_value());
  CHECK(prof.koszul_up_to_depth());
}

TEST_CASE("Delta of the wild 3-Kronecker is Koszul through depth 4") {
  Quiver q({"1", "2"}, {{"a1", "1", "2"}, {"a2", "1", "2"}, {"a3", "1", "2"}});
  BoundQuiver lam(q, {});
  TrivialExtension te = trivial_extension(lam);
  KoszulProfile prof = koszul_profile(te.delta, 4);
  CHECK(prof.linear_through == 4);
  CHECK(!prof.q.has_value());
}

TEST_CASE("Coxeter-type indices grow with the Dynkin rank") {
  // trivial extensions of kA_m/rad^2 detect q = m - 1
  for (int m : {3, 4, 5}) {
    TrivialExtension te = trivial_extension(an_rad_square(m));
    KoszulProfile prof = koszul_profile(te.delta, 8);
    REQUIRE(prof.q.has_value());
    CHECK(*prof.q == m - 1);
    CHECK(prof.q_concentrated);
  }
}

TEST_CASE("(p,q)/(q,p) swap between Delta(kA4/rad^2) and its quadratic dual") {
  TrivialExtension te = trivial_extension(an_rad_square(4));
  KoszulProfile prim = koszul_profile(te.delta, 6);
  CHECK(prim.p == 2);
  REQUIRE(prim.q.has_value());
  CHECK(*prim.q == 3);
  CHECK(prim.q_concentrated);

  BoundQuiver dual = quadratic_dual(te.delta);
  KoszulProfile dprof = koszul_profile(dual, 6);
  CHECK(dprof.p == 3);
  REQUIRE(dprof.q.has_value());
  CHECK(*dprof.q == 2);
  CHECK(dprof.q_concentrated);
}

TEST_CASE("syzygy level vectors of Delta(kA3/rad^2) match hand values") {
  TrivialExtension te = trivial_extension(a3_rad_square());
  // simple at the leftmost vertex of the double-A3 quiver
  auto levels = syzygy_level_vectors(te.delta, 0, 3, 1);
  REQUIRE(levels.size() == 4);
  CHECK(levels[0] == std::vector<Int>{Int(1), Int(0), Int(0), Int(0), Int(0), Int(0)});
  // Omega^1(S_1) = (e2 in degree 1; e1 in degree 2)
  CHECK(levels[1] == std::vector<Int>{Int(0), Int(1), Int(0), Int(1), Int(0), Int(0)});
  // Omega^2(S_1) = (e3 in degree 2; e2 in degree 3)
  CHECK(levels[2] == std::vector<Int>{Int(0), Int(0), Int(1), Int(0), Int(1), Int(0)});
  // Omega^3(S_1) = S_3 concentrated in degree 4
  CHECK(levels[3] == std::vector<Int>{Int(0), Int(0), Int(0), Int(0), Int(0), Int(1)});
}
