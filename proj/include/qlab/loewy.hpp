#pragma once

#include <cmath>

#include "qlab/graded.hpp"
#include "qlab/poly.hpp"

namespace qlab {

/// Loewy matrix L(Lambda): first block column [A_1; ...; A_{n+1}], -E on the
/// superdiagonal, zero elsewhere; size (n+1)m x (n+1)m.
struct LoewyMatrix {
  int n = 0;
  std::size_t m = 0;
  std::vector<IntMatrix> blocks;  // A_1 .. A_{n+1}
  IntMatrix full;
  IntMatrix v0;  // [E; 0; ...; 0], (n+1)m x m
};

inline LoewyMatrix loewy_matrix(const GradedDims& gd, int n) {
  if (gd.t_max() < n + 2)
    fail(errc::invalid_argument, "graded dims must be computed through degree n+2");
  if (!gd.A[n + 2].is_zero())
    fail(errc::not_loewy_bounded, "Lambda_" + std::to_string(n + 2) + " != 0");
  std::size_t m = gd.A[0].rows();
  if (!(gd.A[0] == IntMatrix::identity(m)))
    fail(errc::not_loewy_bounded, "A_0 is not the identity");
  LoewyMatrix L;
  L.n = n;
  L.m = m;
  for (int t = 1; t <= n + 1; ++t) L.blocks.push_back(gd.A[t]);
  std::size_t size = static_cast<std::size_t>(n + 1) * m;
  L.full = IntMatrix(size, size);
  for (int br = 0; br <= n; ++br) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j)
        L.full(br * m + i, j) = L.blocks[br](i, j);
      if (br < n) L.full(br * m + i, (br + 1) * m + i) = -1;
    }
  }
  L.v0 = IntMatrix(size, m);
  for (std::size_t i = 0; i < m; ++i) L.v0(i, i) = 1;
  return L;
}

using LevelVector = std::vector<Int>;

inline LevelVector apply_loewy(const LoewyMatrix& L, const LevelVector& v) {
  std::size_t size = L.full.rows();
  if (v.size() != size) fail(errc::invalid_argument, "level vector has wrong size");
  LevelVector r(size, Int(0));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (L.full(i, j) != 0) r[i] += L.full(i, j) * v[j];
  return r;
}

/// L^s v, exact.
inline LevelVector iterate_levels(const LoewyMatrix& L, LevelVector v, long s) {
  if (s < 0) fail(errc::invalid_argument, "negative power");
  for (long k = 0; k < s; ++k) v = apply_loewy(L, v);
  return v;
}

enum class Verdict { finite, tame, wild };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::finite: return "Finite";
    case Verdict::tame: return "Tame";
    case Verdict::wild: return "Wild";
  }
  return "?";
}

struct ClassificationReport {
  Verdict verdict = Verdict::tame;
  // Finite: first power with L^h V0 without positive entries
  long h = -1;
  // Tame: algebraic (Jordan) degree of eigenvalue 1
  int d = 0;
  // Wild: float spectral radius witness
  double rho_witness = 0.0;
  IntPoly characteristic;
  Int constant_term;
  std::map<std::size_t, int> cyclotomic_multiplicities;
  IntPoly non_cyclotomic_part;
  long h_max = 0;
  bool finite_scan_conclusive = true;  // false: certificate says radius 1 with degree 0
                                        // but no negativity witness below h_max
  std::string note;
  std::string koszul_note;
};

inline long default_h_max(const LoewyMatrix& L) {
  return 2 * static_cast<long>(L.n + 1) * static_cast<long>(L.m) + 16;
}

/// The trichotomy: scan for a negative L^h V0 (Finite); otherwise decide
/// rho = 1 vs rho > 1 by the cyclotomic certificate (Tame/Wild). Verdicts are
/// exact; floats appear only as witnesses.
inline ClassificationReport classify(const LoewyMatrix& L, long h_max = -1) {
  if (h_max < 0) h_max = default_h_max(L);
  if (h_max < 1) fail(errc::invalid_argument, "h_max must be >= 1");
  ClassificationReport rep;
  rep.h_max = h_max;
  rep.characteristic = char_poly(L.full);
  rep.constant_term = rep.characteristic.coeff(0);

  // Finite branch: first h with L^h V0 free of positive entries. The paper's
  // "negative" admits zero rows (a projective syzygy column dies), so the hit
  // condition is "no entry > 0".
  long found_h = -1;
  {
    IntMatrix cur = L.v0;
    for (long h = 1; h <= h_max && found_h < 0; ++h) {
      cur = L.full * cur;
      bool any_positive = false;
      for (std::size_t i = 0; i < cur.rows() && !any_positive; ++i)
        for (std::size_t j = 0; j < cur.cols() && !any_positive; ++j)
          if (cur(i, j) > 0) any_positive = true;
      if (!any_positive) found_h = h;
    }
  }

  std::optional<SpectralCertificate> cert;
  if (rep.constant_term == 1 || rep.constant_term == -1) {
    cert = spectral_radius_one_certificate(rep.characteristic, &L.full);
    rep.cyclotomic_multiplicities = cert->cyclotomic_multiplicities;
    rep.non_cyclotomic_part = cert->non_cyclotomic_part;
  }

  if (found_h > 0) {
    // mutual exclusivity: a periodic algebra may legitimately have an
    // all-roots-of-unity polynomial, but never eigenvalue 1 itself
    if (cert && cert->exactly_one() && cert->degree >= 1)
      fail(errc::invalid_argument,
           "invariant violation: negativity witness coexists with eigenvalue-1 certificate");
    rep.verdict = Verdict::finite;
    rep.h = found_h;
    return rep;
  }
  if (!cert)
    fail(errc::non_unit_constant_term,
         "characteristic polynomial has constant term " + rep.constant_term.str() +
             "; not a Loewy matrix of a stable translation algebra");
  if (cert->exactly_one()) {
    rep.verdict = Verdict::tame;
    rep.d = cert->degree;
    if (cert->degree == 0) {
      rep.finite_scan_conclusive = false;
      rep.note =
          "certificate: all eigenvalues are roots of unity with eigenvalue 1 absent; the "
          "algebra is periodic with Coxeter index beyond the scan bound h_max=" +
          std::to_string(h_max);
    }
  } else {
    rep.verdict = Verdict::wild;
    rep.rho_witness = cert->rho_witness;
  }
  return rep;
}

/// Finite -> dual finite-dimensional (0); Tame(d) -> d; Wild -> infinity
/// (represented as -1).
inline long gk_estimate(const ClassificationReport& rep) {
  switch (rep.verdict) {
    case Verdict::finite: return 0;
    case Verdict::tame: return rep.d;
    case Verdict::wild: return -1;
  }
  return -1;
}

struct ComplexityProbe {
  long s_max = 0;
  long truncated_at = -1;  // negative-entry event (periodic regime)
  double poly_degree = 0;  // fit of log ||L^s v||_1 against log s
  double poly_residual = 0;
  double exp_rate = 0;  // fit of log ||L^s v||_1 against s
  double exp_residual = 0;
  std::string regime;  // "periodic" | "polynomial" | "exponential"
};

/// Least-squares growth diagnostic over the tail half of the iterates; never
/// feeds a verdict.
inline ComplexityProbe complexity_probe(const LoewyMatrix& L, const LevelVector& seed,
                                        long s_max) {
  if (s_max < 8) fail(errc::invalid_argument, "s_max must be >= 8");
  ComplexityProbe probe;
  probe.s_max = s_max;
  std::vector<double> lognorm;
  LevelVector v = seed;
  for (long s = 1; s <= s_max; ++s) {
    v = apply_loewy(L, v);
    bool any_positive = false;
    Int norm = 0;
    for (const Int& x : v) {
      norm += abs(x);
      if (x > 0) any_positive = true;
    }
    if (!any_positive) {
      probe.truncated_at = s;
      probe.regime = "periodic";
      return probe;
    }
    lognorm.push_back(std::log(norm.convert_to<double>()));
  }
  auto fit = [&](bool log_x) {
    std::size_t n = lognorm.size();
    std::size_t from = n / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t cnt = 0;
    for (std::size_t k = from; k < n; ++k) {
      double x = log_x ? std::log(static_cast<double>(k + 1)) : static_cast<double>(k + 1);
      sx += x;
      sy += lognorm[k];
      sxx += x * x;
      sxy += x * lognorm[k];
      ++cnt;
    }
    double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    double inter = (sy - slope * sx) / cnt;
    double res = 0;
    for (std::size_t k = from; k < n; ++k) {
      double x = log_x ? std::log(static_cast<double>(k + 1)) : static_cast<double>(k + 1);
      double e = lognorm[k] - (slope * x + inter);
      res += e * e;
    }
    return std::make_pair(slope, std::sqrt(res / cnt));
  };
  std::tie(probe.poly_degree, probe.poly_residual) = fit(true);
  std::tie(probe.exp_rate, probe.exp_residual) = fit(false);
  probe.regime = probe.poly_residual <= probe.exp_residual ? "polynomial" : "exponential";
  return probe;
}

}  // namespace qlab
