#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qlab/matrix.hpp"
#include "qlab/poly.hpp"

using namespace qlab;

namespace {

// Independent fraction-free Bareiss elimination; rank oracle for rref.
std::size_t bareiss_rank(RatMatrix m) {
  // clear denominators first
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int lcm = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Int d = rat_den(m(i, j));
      lcm = lcm / gcd(lcm, d) * d;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= Rat(lcm);
  }
  std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = rat_num(m(i, j));
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rat(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("rref identity") {
  RatMatrix id = RatMatrix::identity(3);
  RrefResult rr = rref(id);
  CHECK(rr.reduced == id);
  CHECK(rr.rank == 3);
}

TEST_CASE("rref dependent rows") {
  RatMatrix m{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  RrefResult rr = rref(m);
  CHECK(rr.rank == 1);
  CHECK(rr.reduced == RatMatrix{{Rat(1), Rat(2)}, {Rat(0), Rat(0)}});
}

TEST_CASE("rref rank matches Bareiss oracle on random 6x6") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 25; ++trial) {
    RatMatrix m = random_matrix(rng, 6, 6);
    CHECK(rref(m).rank == bareiss_rank(m));
  }
}

TEST_CASE("rref is idempotent") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix m = random_matrix(rng, 4, 6);
    RatMatrix once = rref(m).reduced;
    CHECK(rref(once).reduced == once);
  }
}

TEST_CASE("kernel of identity is empty") { CHECK(kernel_basis(RatMatrix::identity(2)).empty()); }

TEST_CASE("kernel of zero 2x3 has 3 vectors") {
  RatMatrix z(2, 3);
  CHECK(kernel_basis(z).size() == 3);
}

TEST_CASE("kernel of [[1,1,0],[0,1,1]]") {
  RatMatrix m{{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(1), Rat(1)}};
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  // proportional to (1, -1, 1)
  const RatVec& v = k[0];
  CHECK(v[0] == -v[1]);
  CHECK(v[0] == v[2]);
  CHECK(v[0] != 0);
}

TEST_CASE("kernel vectors annihilate and count") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix m = random_matrix(rng, 3, 5);
    auto k = kernel_basis(m);
    CHECK(k.size() + rref(m).rank == m.cols());
    for (const auto& v : k)
      for (const Rat& x : m.apply(v)) CHECK(x == 0);
  }
}

TEST_CASE("orth_complement of empty rows is standard basis") {
  auto b = orth_complement({}, 4);
  REQUIRE(b.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(b[k][j] == (j == k ? 1 : 0));
  }
}

TEST_CASE("orth_complement of full basis is empty") {
  std::vector<RatVec> rows{{Rat(1), Rat(0)}, {Rat(3), Rat(2)}};
  CHECK(orth_complement(rows, 2).empty());
}

TEST_CASE("orth_complement of (1,-c)") {
  Rat c(5, 3);
  auto b = orth_complement({{Rat(1), -c}}, 2);
  REQUIRE(b.size() == 1);
  CHECK(b[0][0] * Rat(1) + b[0][1] * (-c) == 0);
  CHECK(!(b[0][0] == 0 && b[0][1] == 0));
  // up to scale (c, 1)
  CHECK(b[0][0] * Rat(1) == b[0][1] * c);
}

TEST_CASE("double complement spans the original row space") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 15; ++trial) {
    std::size_t dim = 5;
    std::vector<RatVec> rows;
    std::uniform_int_distribution<int> cnt(0, 4);
    int n = cnt(rng);
    for (int r = 0; r < n; ++r) {
      RatMatrix m = random_matrix(rng, 1, dim);
      RatVec v(dim);
      for (std::size_t j = 0; j < dim; ++j) v[j] = m(0, j);
      rows.push_back(v);
    }
    auto dd = orth_complement(orth_complement(rows, dim), dim);
    CHECK(same_span(rows, dd, dim));
  }
}

TEST_CASE("char_poly of 2x2 identity is (x-1)^2") {
  IntPoly p = char_poly(IntMatrix::identity(2));
  CHECK(p == IntPoly({Int(1), Int(-2), Int(1)}));
}

TEST_CASE("char_poly of swap is x^2-1") {
  IntMatrix m{{Int(0), Int(1)}, {Int(1), Int(0)}};
  CHECK(char_poly(m) == IntPoly({Int(-1), Int(0), Int(1)}));
}

namespace {

// cofactor-expansion characteristic polynomial, the oracle for sizes <= 5
IntPoly det_poly(std::vector<std::vector<IntPoly>> a) {
  std::size_t n = a.size();
  if (n == 0) return IntPoly::constant(1);
  if (n == 1) return a[0][0];
  IntPoly acc;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<std::vector<IntPoly>> minor;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r) continue;
      std::vector<IntPoly> row;
      for (std::size_t j = 1; j < n; ++j) row.push_back(a[i][j]);
      minor.push_back(std::move(row));
    }
    IntPoly term = a[r][0] * det_poly(minor);
    if (r % 2 == 1) term = IntPoly() - term;
    acc = acc + term;
  }
  return acc;
}

IntPoly char_poly_oracle(const IntMatrix& m) {
  std::size_t n = m.rows();
  std::vector<std::vector<IntPoly>> a(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Int> c{-m(i, j)};
      if (i == j) c.push_back(1);
      a[i][j] = IntPoly(c);
    }
  return det_poly(a);
}

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("char_poly matches cofactor oracle up to size 5") {
  std::mt19937_64 rng(4242);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      IntMatrix m = random_int_matrix(rng, n, -4, 4);
      CHECK(char_poly(m) == char_poly_oracle(m));
    }
  }
}

TEST_CASE("Cayley-Hamilton up to size 6") {
  std::mt19937_64 rng(31337);
  for (std::size_t n = 2; n <= 6; ++n) {
    IntMatrix m = random_int_matrix(rng, n, -3, 3);
    IntPoly p = char_poly(m);
    IntMatrix acc(n, n);
    IntMatrix pw = IntMatrix::identity(n);
    for (long k = 0; k <= p.degree(); ++k) {
      IntMatrix term = pw;
      Int c = p.coeff(static_cast<std::size_t>(k));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) term(i, j) = term(i, j) * c;
      acc = acc + term;
      pw = pw * m;
    }
    CHECK(acc.is_zero());
  }
}
