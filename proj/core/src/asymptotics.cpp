#include "qprod/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "qprod/bessel.hpp"

namespace qprod {

namespace {

void require_hypothesis(const ProductSpec& spec, const Rational& omega, std::int64_t n) {
  if (n < 1 || Rational(24 * n) + omega <= 0) {
    throw HypothesisError("n = " + std::to_string(n) + " does not satisfy n > -Omega/24 (Omega = " +
                          omega.get_str() + ")");
  }
  if (!check_assumption(spec).holds) {
    throw HypothesisError("assumption on (kappa, ell) classes fails for spec " + spec.to_string());
  }
}

}  // namespace

std::int64_t default_K(const ProductSpec& spec, std::int64_t n) {
  const double shifted = static_cast<double>(n) + omega_big(spec).get_d() / 24.0;
  if (shifted <= 0) return 1;
  const auto K = static_cast<std::int64_t>(std::floor(std::sqrt(2 * std::numbers::pi * shifted)));
  return std::max<std::int64_t>(K, 1);
}

template <class T>
std::complex<T> h_sum(const ProductSpec& spec, std::int64_t kappa, std::int64_t ell,
                      std::int64_t k, std::int64_t n, std::int64_t hbar_shift) {
  const PhaseExponent global{make_rational(spec.delta_sum(), 2)};
  CompensatedSum<T> acc;
  for (std::int64_t h = kappa; h < k; h += ell) {
    if (std::gcd(h, k) != 1) continue;
    const ArcDatum datum = arc_datum(spec, h, k, hbar_shift);
    // e^{-2 pi i n h / k} as an exact exponent of pi i.
    const Rational nh = mod(make_rational(-2 * (n % k) * h, k), 2);
    const PhaseExponent total = global + datum.phase + PhaseExponent(nh);
    acc.add(total.value<T>() * datum.pi_value<T>());
  }
  return acc.value();
}

template <class T>
LogComplex<T> bessel_factor(const Rational& omega, const Rational& delta, std::int64_t k,
                            std::int64_t n) {
  constexpr T pi = std::numbers::pi_v<T>;
  const T shifted = to_floating<T>(Rational(Rational(24 * n) + omega));
  const T dv = to_floating<T>(delta);
  const T x = pi / (6 * T(k)) * std::sqrt(dv * shifted);
  const T log_prefactor =
      std::log(2 * pi) - T(0.5) * std::log(shifted) + T(0.5) * std::log(dv) - std::log(T(k));
  return LogComplex<T>::from_log(log_prefactor) * bessel_I_minus1<T>(x);
}

template <class T>
std::vector<BesselTerm<T>> asymptotic_terms(const ProductSpec& spec, std::int64_t n,
                                            std::int64_t K) {
  const Rational omega = omega_big(spec);
  require_hypothesis(spec, omega, n);
  const std::int64_t L = spec.modulus_lcm();
  std::vector<BesselTerm<T>> out;
  for (const ArcClass& cls : classify_arcs(spec).positive) {
    for (std::int64_t k = cls.ell; k <= K; k += L) {
      const std::complex<T> s = h_sum<T>(spec, cls.kappa, cls.ell, k, n);
      if (s == std::complex<T>(0)) continue;
      out.push_back({cls.kappa, cls.ell, k,
                     bessel_factor<T>(omega, cls.delta_value, k, n) * LogComplex<T>::from_complex(s)});
    }
  }
  return out;
}

template <class T>
AsymptoticValue<T> g_asymptotic(const ProductSpec& spec, std::int64_t n,
                                std::optional<std::int64_t> K) {
  const std::int64_t cutoff = K.value_or(default_K(spec, n));
  if (cutoff < 1) throw std::invalid_argument("g_asymptotic: K must be positive");
  const auto terms = asymptotic_terms<T>(spec, n, cutoff);
  std::vector<LogComplex<T>> values;
  values.reserve(terms.size());
  for (const auto& t : terms) values.push_back(t.value);
  return {n, cutoff, log_sum<T>(values), terms.size()};
}

#define QPROD_ASYMPTOTICS_INSTANTIATE(T)                                                      \
  template std::complex<T> h_sum<T>(const ProductSpec&, std::int64_t, std::int64_t,           \
                                    std::int64_t, std::int64_t, std::int64_t);                \
  template LogComplex<T> bessel_factor<T>(const Rational&, const Rational&, std::int64_t,     \
                                          std::int64_t);                                      \
  template std::vector<BesselTerm<T>> asymptotic_terms<T>(const ProductSpec&, std::int64_t,   \
                                                          std::int64_t);                      \
  template AsymptoticValue<T> g_asymptotic<T>(const ProductSpec&, std::int64_t,               \
                                              std::optional<std::int64_t>);
QPROD_ASYMPTOTICS_INSTANTIATE(double)
QPROD_ASYMPTOTICS_INSTANTIATE(long double)

}  // namespace qprod
