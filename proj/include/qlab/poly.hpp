#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "qlab/matrix.hpp"

namespace qlab {

/// Integer polynomial, coefficients lowest degree first, normalized so the
/// leading coefficient is nonzero (zero polynomial = empty vector).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPoly constant(Int v) { return IntPoly(std::vector<Int>{std::move(v)}); }
  static IntPoly x_power(std::size_t k, Int lead = Int(1)) {
    std::vector<Int> c(k + 1);
    c[k] = std::move(lead);
    return IntPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1 by convention here
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }
  Int leading() const { return c_.empty() ? Int(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  IntPoly operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) + o.coeff(k);
    return IntPoly(std::move(r));
  }

  IntPoly operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) - o.coeff(k);
    return IntPoly(std::move(r));
  }

  IntPoly operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
  }

  /// Division by a monic divisor; returns nullopt unless it divides exactly
  /// over the integers.
  std::optional<IntPoly> divide_exact(const IntPoly& monic_divisor) const {
    if (!monic_divisor.is_monic()) fail(errc::invalid_argument, "divisor must be monic");
    if (is_zero()) return IntPoly();
    if (degree() < monic_divisor.degree()) return std::nullopt;
    std::vector<Int> rem = c_;
    std::size_t dd = static_cast<std::size_t>(monic_divisor.degree());
    std::vector<Int> quot(rem.size() - dd);
    for (std::size_t k = rem.size(); k-- > dd;) {
      Int q = rem[k];
      quot[k - dd] = q;
      if (q == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * monic_divisor.c_[j];
    }
    for (const Int& r : rem)
      if (r != 0) return std::nullopt;
    return IntPoly(std::move(quot));
  }

  Int eval(const Int& x) const {
    Int acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  std::complex<double> eval(const std::complex<double>& z) const {
    std::complex<double> acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + static_cast<double>(c_[k]);
    return acc;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k] == 0) continue;
      if (!s.empty()) s += (c_[k] > 0) ? " + " : " - ";
      else if (c_[k] < 0) s += "-";
      Int a = abs(c_[k]);
      std::string term;
      if (a != 1 || k == 0) term = a.str();
      if (k >= 1) {
        if (!term.empty()) term += "*";
        term += "x";
        if (k > 1) term += "^" + std::to_string(k);
      }
      s += term;
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

inline IntPoly derivative(const IntPoly& p) {
  if (p.degree() <= 0) return IntPoly();
  std::vector<Int> c(p.degree());
  for (long k = 1; k <= p.degree(); ++k) c[k - 1] = p.coeff(k) * Int(k);
  return IntPoly(std::move(c));
}

namespace detail {
// gcd of integer polynomials via the rational Euclid algorithm, returned
// primitive with positive leading coefficient
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
  auto to_rat = [](const IntPoly& p) {
    std::vector<Rat> c;
    for (const Int& x : p.coeffs()) c.push_back(Rat(x));
    return c;
  };
  std::vector<Rat> x = to_rat(a), y = to_rat(b);
  auto deg = [](const std::vector<Rat>& v) { return static_cast<long>(v.size()) - 1; };
  auto trim = [](std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(x);
  trim(y);
  while (!y.empty()) {
    // x = x mod y
    while (deg(x) >= deg(y) && !x.empty()) {
      Rat f = x.back() / y.back();
      long shift = deg(x) - deg(y);
      for (long k = 0; k <= deg(y); ++k) x[k + shift] -= f * y[k];
      trim(x);
    }
    std::swap(x, y);
  }
  if (x.empty()) return IntPoly();
  Int lcm_den = 1;
  for (const Rat& c : x) {
    Int d = rat_den(c);
    lcm_den = lcm_den / gcd(lcm_den, d) * d;
  }
  std::vector<Int> z;
  for (const Rat& c : x) z.push_back(rat_num(c * Rat(lcm_den)));
  Int content = 0;
  for (const Int& c : z) content = gcd(content, c);
  if (content == 0) return IntPoly();
  if (z.back() < 0) content = -content;
  for (Int& c : z) c /= content;
  return IntPoly(std::move(z));
}
}  // namespace detail

/// Square-free part p / gcd(p, p'): same root set, all roots simple.
inline IntPoly square_free_part(const IntPoly& p) {
  if (p.degree() <= 1) return p;
  IntPoly g = detail::poly_gcd(p, derivative(p));
  if (g.degree() <= 0) return p;
  // exact over Q; rescale to integer coefficients
  std::vector<Rat> num;
  for (const Int& c : p.coeffs()) num.push_back(Rat(c));
  std::vector<Rat> q(p.degree() - g.degree() + 1);
  for (long k = static_cast<long>(num.size()) - 1; k >= g.degree(); --k) {
    Rat f = num[k] / Rat(g.leading());
    q[k - g.degree()] = f;
    for (long j = 0; j <= g.degree(); ++j) num[k - g.degree() + j] -= f * Rat(g.coeff(j));
  }
  Int lcm_den = 1;
  for (const Rat& c : q) {
    Int d = rat_den(c);
    lcm_den = lcm_den / gcd(lcm_den, d) * d;
  }
  std::vector<Int> z;
  for (const Rat& c : q) z.push_back(rat_num(c * Rat(lcm_den)));
  return IntPoly(std::move(z));
}

inline Int euler_phi(std::size_t n) {
  Int result = n;
  std::size_t m = n;
  for (std::size_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

/// k-th cyclotomic polynomial via Phi_k = (x^k - 1) / prod_{d | k, d < k} Phi_d.
inline IntPoly cyclotomic(std::size_t k) {
  static std::map<std::size_t, IntPoly> cache;
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  std::vector<Int> xk(k + 1);
  xk[0] = -1;
  xk[k] = 1;
  IntPoly p(std::move(xk));
  for (std::size_t d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    auto q = p.divide_exact(cyclotomic(d));
    if (!q) fail(errc::invalid_argument, "cyclotomic recursion failed");
    p = *q;
  }
  cache[k] = p;
  return p;
}

/// Characteristic polynomial of an integer matrix, monic, exact.
/// Faddeev–LeVerrier; every division is by construction exact over Z.
inline IntPoly char_poly(const IntMatrix& a) {
  if (a.rows() != a.cols()) fail(errc::invalid_argument, "char_poly: matrix not square");
  std::size_t n = a.rows();
  std::vector<Int> coeffs(n + 1);
  coeffs[n] = 1;
  IntMatrix m(n, n);  // M_0 = 0
  Int c = 1;          // c_0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A (M_{k-1} + c_{k-1} E); c_k = -tr(M_k)/k
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c;
    m = a * m;
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += m(i, i);
    if (tr % Int(k) != 0) fail(errc::invalid_argument, "char_poly: inexact trace division");
    c = -tr / Int(k);
    coeffs[n - k] = c;
  }
  return IntPoly(std::move(coeffs));
}

/// The distinct complex roots of p (multiplicities dropped) by Durand–Kerner
/// on the square-free part. Float diagnostics only; never feeds a verdict.
inline std::vector<std::complex<double>> complex_roots(const IntPoly& p_in) {
  IntPoly p = square_free_part(p_in);
  long deg = p.degree();
  if (deg <= 0) return {};
  std::vector<std::complex<double>> monic(deg + 1);
  double lead = static_cast<double>(p.leading());
  for (long k = 0; k <= deg; ++k) monic[k] = static_cast<double>(p.coeff(k)) / lead;
  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc = 0;
    for (long k = deg; k >= 0; --k) acc = acc * z + monic[k];
    return acc;
  };
  double bound = 0;
  for (long k = 0; k < deg; ++k) bound = std::max(bound, std::abs(monic[k]));
  bound += 1.0;
  std::vector<std::complex<double>> z(deg);
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> w = 1.0;
  for (long k = 0; k < deg; ++k) {
    w *= seed;
    z[k] = bound * w / std::abs(w) * (0.5 + 0.5 * (k + 1.0) / deg);
  }
  for (int iter = 0; iter < 1000; ++iter) {
    double moved = 0;
    for (long i = 0; i < deg; ++i) {
      std::complex<double> denom = 1.0;
      for (long j = 0; j < deg; ++j)
        if (j != i) denom *= (z[i] - z[j]);
      if (std::abs(denom) < 1e-300) {
        z[i] += std::complex<double>(1e-8, 1e-8);
        continue;
      }
      std::complex<double> delta = eval(z[i]) / denom;
      z[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-13 * bound) break;
  }
  return z;
}

/// max |root|, refined by Newton iteration when the dominant root is real.
inline double spectral_radius_estimate(const IntPoly& p_in) {
  IntPoly p = square_free_part(p_in);
  auto roots = complex_roots(p);
  double rho = 0;
  std::complex<double> dominant = 0;
  for (const auto& z : roots)
    if (std::abs(z) > rho) {
      rho = std::abs(z);
      dominant = z;
    }
  if (rho > 0 && std::abs(dominant.imag()) < 1e-7 * rho) {
    // polish the real root to 1e-9 relative; roots of the square-free part are simple
    double x = dominant.real();
    for (int it = 0; it < 100; ++it) {
      double f = 0, df = 0;
      for (long k = p.degree(); k >= 0; --k) {
        df = df * x + f;
        f = f * x + static_cast<double>(p.coeff(k));
      }
      if (df == 0) break;
      double nx = x - f / df;
      if (std::abs(nx - x) <= 1e-12 * std::abs(x)) {
        x = nx;
        break;
      }
      x = nx;
    }
    rho = std::abs(x);
  }
  return rho;
}

struct SpectralCertificate {
  enum class Kind { exactly_one, greater_than_one } kind;
  // exactly_one: all roots are roots of unity (Kronecker), spectral radius 1 exactly.
  //   degree = multiplicity of the eigenvalue 1: Jordan degree when a matrix was
  //   supplied, multiplicity of the factor (x-1) otherwise.
  // greater_than_one: some root lies outside the unit disk; rho_witness is a
  //   floating point estimate of the spectral radius (diagnostic only).
  int degree = 0;
  double rho_witness = 0.0;
  std::map<std::size_t, int> cyclotomic_multiplicities;  // k -> multiplicity of Phi_k
  IntPoly non_cyclotomic_part;

  bool exactly_one() const { return kind == Kind::exactly_one; }
};

/// Jordan degree of eigenvalue 1: smallest k with rank((M-E)^k) = rank((M-E)^{k+1}).
inline int jordan_degree_of_one(const IntMatrix& m) {
  IntMatrix n = m - IntMatrix::identity(m.rows());
  IntMatrix pow = IntMatrix::identity(m.rows());
  std::size_t prev = m.rows();
  for (int k = 1; k <= static_cast<int>(m.rows()) + 1; ++k) {
    pow = pow * n;
    std::size_t r = rank(pow);
    if (r == prev) return k - 1;
    prev = r;
  }
  return static_cast<int>(m.rows());
}

/// Exact dichotomy for monic integer polynomials with constant term +-1:
/// either every root is a root of unity (then the spectral radius is exactly 1)
/// or some root has modulus > 1 (Kronecker's theorem). Decided by stripping
/// cyclotomic factors Phi_k with phi(k) <= deg p.
inline SpectralCertificate spectral_radius_one_certificate(const IntPoly& p,
                                                           const IntMatrix* matrix = nullptr) {
  if (!p.is_monic()) fail(errc::non_unit_constant_term, "polynomial is not monic");
  Int c0 = p.coeff(0);
  if (c0 != 1 && c0 != -1)
    fail(errc::non_unit_constant_term, "constant term is " + c0.str() + ", expected +-1");
  SpectralCertificate cert;
  IntPoly rest = p;
  long deg = p.degree();
  // phi(k) <= d forces k <= 2 d^2 + 1 comfortably; iterate and bail early.
  std::size_t kmax = static_cast<std::size_t>(2 * deg * deg + 2);
  for (std::size_t k = 1; k <= kmax && rest.degree() > 0; ++k) {
    if (euler_phi(k) > rest.degree()) continue;
    IntPoly phi = cyclotomic(k);
    while (true) {
      auto q = rest.divide_exact(phi);
      if (!q) break;
      rest = *q;
      cert.cyclotomic_multiplicities[k]++;
    }
  }
  if (rest.degree() <= 0) {
    cert.kind = SpectralCertificate::Kind::exactly_one;
    cert.degree = matrix ? jordan_degree_of_one(*matrix)
                         : (cert.cyclotomic_multiplicities.count(1)
                                ? cert.cyclotomic_multiplicities.at(1)
                                : 0);
    cert.rho_witness = 1.0;
  } else {
    cert.kind = SpectralCertificate::Kind::greater_than_one;
    cert.non_cyclotomic_part = rest;
    cert.rho_witness = spectral_radius_estimate(p);
  }
  return cert;
}

}  // namespace qlab
