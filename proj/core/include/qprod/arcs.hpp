#pragma once

// Per-arc data of the circle method for G(q): lambda / lambda*, Omega, Delta,
// the major/minor classification of residue classes (kappa, ell) and the
// exact phase assembled for each Farey fraction h/k.

#include <complex>
#include <cstdint>
#include <vector>

#include "qprod/arith.hpp"
#include "qprod/phase.hpp"
#include "qprod/qseries.hpp"

namespace qprod {

struct LambdaValue {
  std::int64_t lambda = 0;   // ceil(r h / gcd(m, k))
  Rational lambda_star = 0;  // lambda - r h / gcd(m, k), in [0, 1)
};

LambdaValue lambda(std::int64_t m, std::int64_t r, std::int64_t h, std::int64_t k);

/// Omega = sum_j delta_j (2 m_j - 12 r_j + 12 r_j^2 / m_j).
Rational omega_big(const ProductSpec& spec);

/// Delta(h, k). Only depends on gcd(m_j, k) and h mod gcd(m_j, k), so it is
/// also the class value Delta(kappa, ell) when called with (kappa, ell).
Rational delta_arc(const ProductSpec& spec, std::int64_t kappa, std::int64_t ell);

/// Upsilon(x) for 0 <= x < 1.
Rational upsilon(const Rational& x);

struct ArcClass {
  std::int64_t kappa = 0;
  std::int64_t ell = 1;
  Rational delta_value = 0;

  friend bool operator==(const ArcClass&, const ArcClass&) = default;
};

struct ArcPartition {
  std::vector<ArcClass> positive;     // Delta > 0
  std::vector<ArcClass> nonpositive;  // Delta <= 0
};

/// Classes ordered by ell, then kappa.
ArcPartition classify_arcs(const ProductSpec& spec);

struct AssumptionViolation {
  std::int64_t kappa = 0;
  std::int64_t ell = 1;
  Rational min_lhs = 0;  // min_j Upsilon(lambda*_j) gcd^2(m_j, ell) / m_j
  Rational rhs = 0;      // Delta / 24
};

struct AssumptionReport {
  bool holds = true;
  std::vector<AssumptionViolation> violations;
};

AssumptionReport check_assumption(const ProductSpec& spec);

/// One factor (1 - e^{2 pi i x})^power of Pi_{h,k}; x kept exactly in [0, 1).
struct PiFactor {
  Rational exponent = 0;
  std::int64_t power = 0;
};

struct ArcDatum {
  FareyPair hk;
  std::vector<std::int64_t> lambdas;
  std::vector<Rational> lambda_stars;
  std::vector<std::int64_t> hbars;
  /// (-1)^{sum delta_j lambda_j} * omega_{h,k}^2 * D_{h,k}.
  PhaseExponent phase;
  std::vector<PiFactor> pi_factors;

  template <class T>
  std::complex<T> pi_value() const;
};

extern template std::complex<double> ArcDatum::pi_value<double>() const;
extern template std::complex<long double> ArcDatum::pi_value<long double>() const;

/// Exponent of omega_{h,k}^2 alone (as a multiple of pi i).
PhaseExponent omega_squared_phase(const ProductSpec& spec, std::int64_t h, std::int64_t k);
/// Exponent of D_{h,k} alone, using hbar_j + hbar_shift * k / gcd(m_j, k).
PhaseExponent d_phase(const ProductSpec& spec, std::int64_t h, std::int64_t k,
                      std::int64_t hbar_shift = 0);

/// Requires gcd(h, k) = 1 and 0 <= h < k. `hbar_shift` replaces every hbar_j by
/// hbar_j + hbar_shift * k / gcd(m_j, k); results must not depend on it.
/// Throws std::logic_error if a Pi factor would vanish.
ArcDatum arc_datum(const ProductSpec& spec, std::int64_t h, std::int64_t k,
                   std::int64_t hbar_shift = 0);

/// (kappa, ell) with k = ell mod L, 1 <= ell <= L, and h = kappa mod ell.
std::pair<std::int64_t, std::int64_t> residue_class(const ProductSpec& spec, std::int64_t h,
                                                    std::int64_t k);

}  // namespace qprod
