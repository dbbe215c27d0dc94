#include "qprod/arcs.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qprod {

LambdaValue lambda(std::int64_t m, std::int64_t r, std::int64_t h, std::int64_t k) {
  const std::int64_t d = std::gcd(m, k);
  const Rational x = make_rational(r * h, d);
  const BigInt c = ceil(x);
  Rational star{Rational(c) - x};
  star.canonicalize();
  return {c.get_si(), star};
}

Rational omega_big(const ProductSpec& spec) {
  Rational acc = 0;
  for (const auto& f : spec.factors()) {
    acc += Rational(f.delta) *
           (Rational(2 * f.m - 12 * f.r) + make_rational(12 * f.r * f.r, f.m));
  }
  acc.canonicalize();
  return acc;
}

Rational delta_arc(const ProductSpec& spec, std::int64_t kappa, std::int64_t ell) {
  Rational acc = 0;
  for (const auto& f : spec.factors()) {
    const std::int64_t d = std::gcd(f.m, ell);
    const Rational d2m = make_rational(d * d, f.m);
    const Rational s = lambda(f.m, f.r, kappa, ell).lambda_star;
    acc += Rational(f.delta) * (2 * d2m + 12 * d2m * (s * s - s));
  }
  acc = -acc;
  acc.canonicalize();
  return acc;
}

Rational upsilon(const Rational& x) {
  if (sgn(x) == 0) return 1;
  if (x <= Rational(1, 2)) return x;
  return Rational(1 - x);
}

ArcPartition classify_arcs(const ProductSpec& spec) {
  ArcPartition out;
  const std::int64_t L = spec.modulus_lcm();
  for (std::int64_t ell = 1; ell <= L; ++ell) {
    for (std::int64_t kappa = 0; kappa < ell; ++kappa) {
      ArcClass c{kappa, ell, delta_arc(spec, kappa, ell)};
      (sgn(c.delta_value) > 0 ? out.positive : out.nonpositive).push_back(std::move(c));
    }
  }
  return out;
}

AssumptionReport check_assumption(const ProductSpec& spec) {
  AssumptionReport report;
  const std::int64_t L = spec.modulus_lcm();
  for (std::int64_t ell = 1; ell <= L; ++ell) {
    for (std::int64_t kappa = 0; kappa < ell; ++kappa) {
      Rational lhs;
      bool first = true;
      for (const auto& f : spec.factors()) {
        const std::int64_t d = std::gcd(f.m, ell);
        Rational v{upsilon(lambda(f.m, f.r, kappa, ell).lambda_star) * make_rational(d * d, f.m)};
        if (first || v < lhs) lhs = v;
        first = false;
      }
      Rational rhs{delta_arc(spec, kappa, ell) / 24};
      rhs.canonicalize();
      lhs.canonicalize();
      if (lhs < rhs) {
        report.holds = false;
        report.violations.push_back({kappa, ell, lhs, rhs});
      }
    }
  }
  return report;
}

template <class T>
std::complex<T> ArcDatum::pi_value() const {
  std::complex<T> acc{1, 0};
  for (const auto& f : pi_factors) {
    const std::complex<T> unit = PhaseExponent(Rational(2 * f.exponent)).value<T>();
    const std::complex<T> base = T(1) - unit;
    acc *= std::pow(base, static_cast<int>(f.power));
  }
  return acc;
}

template std::complex<double> ArcDatum::pi_value<double>() const;
template std::complex<long double> ArcDatum::pi_value<long double>() const;

PhaseExponent omega_squared_phase(const ProductSpec& spec, std::int64_t h, std::int64_t k) {
  Rational t = 0;
  for (const auto& f : spec.factors()) {
    const std::int64_t d = std::gcd(f.m, k);
    t -= 2 * Rational(f.delta) * dedekind_sum((f.m / d) * h, k / d);
  }
  return PhaseExponent(t);
}

PhaseExponent d_phase(const ProductSpec& spec, std::int64_t h, std::int64_t k,
                      std::int64_t hbar_shift) {
  Rational t = 0;
  for (const auto& f : spec.factors()) {
    const std::int64_t d = std::gcd(f.m, k);
    const auto lam = lambda(f.m, f.r, h, k);
    const std::int64_t hb = hbar(f.m, h, k) + hbar_shift * (k / d);
    Rational inner = make_rational(f.r * h, k) - make_rational(f.r * d, f.m * k) +
                     make_rational(2 * f.r * d, f.m * k) * lam.lambda_star +
                     make_rational(hb * d, k) * Rational(lam.lambda * lam.lambda - lam.lambda);
    t += Rational(f.delta) * inner;
  }
  return PhaseExponent(t);
}

ArcDatum arc_datum(const ProductSpec& spec, std::int64_t h, std::int64_t k,
                   std::int64_t hbar_shift) {
  if (k < 1 || h < 0 || h >= k || std::gcd(h, k) != 1) {
    throw std::invalid_argument("arc_datum: need 0 <= h < k and gcd(h, k) = 1");
  }
  ArcDatum out;
  out.hk = {h, k};
  std::int64_t sign_exponent = 0;
  for (const auto& f : spec.factors()) {
    const std::int64_t d = std::gcd(f.m, k);
    const auto lam = lambda(f.m, f.r, h, k);
    const std::int64_t hb = hbar(f.m, h, k) + hbar_shift * (k / d);
    out.lambdas.push_back(lam.lambda);
    out.lambda_stars.push_back(lam.lambda_star);
    out.hbars.push_back(hb);
    sign_exponent += f.delta * lam.lambda;
    if (sgn(lam.lambda_star) == 0) {
      // (r d + r hbar m h) / (m k), a real noninteger.
      Rational x = make_rational(f.r * d + f.r * hb * f.m * h, f.m * k);
      x = mod(x, 1);
      if (sgn(x) == 0) {
        throw std::logic_error("arc_datum: vanishing Pi factor at h/k = " + std::to_string(h) +
                               "/" + std::to_string(k));
      }
      out.pi_factors.push_back({x, f.delta});
    }
  }
  out.phase = PhaseExponent(Rational(sign_exponent)) + omega_squared_phase(spec, h, k) +
              d_phase(spec, h, k, hbar_shift);
  return out;
}

std::pair<std::int64_t, std::int64_t> residue_class(const ProductSpec& spec, std::int64_t h,
                                                    std::int64_t k) {
  const std::int64_t L = spec.modulus_lcm();
  std::int64_t ell = mod(k, L);
  if (ell == 0) ell = L;
  return {mod(h, ell), ell};
}

}  // namespace qprod
