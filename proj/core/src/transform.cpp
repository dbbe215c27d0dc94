#include "qprod/transform.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qprod/arcs.hpp"
#include "qprod/parallel.hpp"

#include <random>

namespace qprod {

namespace {

template <class T>
constexpr std::complex<T> kI{0, 1};

template <class T>
std::complex<T> expi(std::complex<T> x) {  // e^{2 pi i x}
  return std::exp(T(2) * std::numbers::pi_v<T> * kI<T> * x);
}

template <class T>
void require_upper(std::complex<T> tau, const char* what) {
  if (!(tau.imag() > 0)) throw std::domain_error(std::string(what) + ": Im(tau) must be positive");
}

}  // namespace

ModularMatrix build_gamma(std::int64_t m, std::int64_t h, std::int64_t k) {
  if (k < 1 || h < 0 || h >= k || std::gcd(h, k) != 1) {
    throw std::invalid_argument("build_gamma: need 0 <= h < k and gcd(h, k) = 1");
  }
  const std::int64_t d = std::gcd(m, k);
  const std::int64_t mp = m / d, kp = k / d;
  const std::int64_t hb = hbar(m, h, k);
  const std::int64_t num = hb * mp * h + 1;
  if (num % kp != 0) throw std::logic_error("build_gamma: hbar congruence violated");
  ModularMatrix g{hb, -(num / kp), kp, -mp * h};
  if (g.det() != 1) throw std::logic_error("build_gamma: determinant is not 1");
  return g;
}

std::int64_t product_terms(double im_tau) {
  if (!(im_tau > 0)) throw std::domain_error("product_terms: Im(tau) must be positive");
  return static_cast<std::int64_t>(std::ceil(60.0 / im_tau));
}

template <class T>
std::complex<T> eval_eta(std::complex<T> tau, std::int64_t terms) {
  require_upper(tau, "eval_eta");
  const std::complex<T> q = expi(tau);
  std::complex<T> acc = expi(tau / T(24));
  std::complex<T> qn = 1;
  for (std::int64_t n = 1; n <= terms; ++n) {
    qn *= q;
    acc *= T(1) - qn;
  }
  return acc;
}

template <class T>
std::complex<T> eval_eta(std::complex<T> tau) {
  require_upper(tau, "eval_eta");
  return eval_eta(tau, product_terms(static_cast<double>(tau.imag())));
}

template <class T>
std::complex<T> eval_theta(std::complex<T> sigma, std::complex<T> tau, std::int64_t terms) {
  require_upper(tau, "eval_theta");
  constexpr T pi = std::numbers::pi_v<T>;
  // Pair nu and -nu so the oddness in sigma is preserved term by term.
  std::complex<T> acc = 0;
  for (std::int64_t j = terms; j >= 0; --j) {
    const T nu = T(j) + T(0.5);
    const std::complex<T> quad = pi * kI<T> * nu * nu * tau;
    const std::complex<T> lin = T(2) * pi * kI<T> * nu * (sigma + T(0.5));
    const std::complex<T> lin_neg = T(2) * pi * kI<T> * (-nu) * (sigma + T(0.5));
    acc += std::exp(lin + quad) + std::exp(lin_neg + quad);
  }
  return acc;
}

template <class T>
std::complex<T> eval_theta(std::complex<T> sigma, std::complex<T> tau) {
  require_upper(tau, "eval_theta");
  // log|term| = -pi t nu^2 - 2 pi y nu, peaked at nu = -y/t.
  const double t = static_cast<double>(tau.imag());
  const double y = static_cast<double>(sigma.imag());
  const double centre = std::abs(y / t);
  const double width = std::sqrt(45.0 / (std::numbers::pi * t));
  return eval_theta(sigma, tau, static_cast<std::int64_t>(std::ceil(centre + width)) + 1);
}

template <class T>
std::complex<T> eval_zh(std::complex<T> sigma, std::complex<T> tau, std::int64_t terms) {
  require_upper(tau, "eval_zh");
  std::complex<T> acc = 1;
  for (std::int64_t n = 0; n <= terms; ++n) {
    acc *= (T(1) - expi(sigma + T(n) * tau)) * (T(1) - expi(-sigma + T(n + 1) * tau));
  }
  return acc;
}

template <class T>
std::complex<T> eval_zh(std::complex<T> sigma, std::complex<T> tau) {
  require_upper(tau, "eval_zh");
  const double t = static_cast<double>(tau.imag());
  const double y = std::abs(static_cast<double>(sigma.imag()));
  return eval_zh(sigma, tau, static_cast<std::int64_t>(std::ceil((60.0 + y) / t)));
}

template <class T>
std::complex<T> eval_zh_via_theta(std::complex<T> sigma, std::complex<T> tau) {
  constexpr T pi = std::numbers::pi_v<T>;
  return kI<T> * std::exp(-pi * kI<T> * tau / T(6)) * std::exp(pi * kI<T> * sigma) *
         eval_theta(sigma, tau) / eval_eta(tau);
}

template <class T>
std::complex<T> eval_Zh(std::int64_t r, std::int64_t m, std::complex<T> tau, std::int64_t terms) {
  if (r < 1 || r >= m) throw std::invalid_argument("eval_Zh: need 1 <= r < m");
  return eval_zh(T(r) * tau, T(m) * tau, terms);
}

template <class T>
std::complex<T> eval_Zh(std::int64_t r, std::int64_t m, std::complex<T> tau) {
  if (r < 1 || r >= m) throw std::invalid_argument("eval_Zh: need 1 <= r < m");
  return eval_zh(T(r) * tau, T(m) * tau);
}

PhaseExponent chi_exponent(const ModularMatrix& g) {
  if (g.c <= 0) throw std::invalid_argument("chi: c must be positive");
  Rational t = make_rational(g.a + g.d, 12 * g.c) - dedekind_sum(g.d, g.c) - Rational(1, 4);
  return PhaseExponent(t);
}

template <class T>
std::complex<T> chi(const ModularMatrix& gamma) {
  return chi_exponent(gamma).value<T>();
}

template <class T>
std::complex<T> eval_product(const ProductSpec& spec, std::complex<T> tau) {
  std::complex<T> acc = 1;
  for (const auto& f : spec.factors()) {
    acc *= std::pow(eval_Zh(f.r, f.m, tau), static_cast<int>(f.delta));
  }
  return acc;
}

template <class T>
TransformedArgument<T> transformed_argument(std::int64_t m, std::int64_t r, std::int64_t h,
                                            std::int64_t k, std::complex<T> z) {
  const std::int64_t d = std::gcd(m, k);
  const auto lam = lambda(m, r, h, k);
  const std::int64_t hb = hbar(m, h, k);
  const std::complex<T> imag_part = kI<T> * T(d * d) / (T(m) * T(k) * z);
  TransformedArgument<T> out;
  out.tau = T(hb * d) / T(k) + imag_part;
  out.sigma = T(r * d) / (T(m) * T(k)) + T(lam.lambda) * T(hb * d) / T(k) +
              to_floating<T>(lam.lambda_star) * imag_part;
  return out;
}

template <class T>
TransformedArgument<T> transformed_argument_moebius(std::int64_t m, std::int64_t r,
                                                    std::int64_t h, std::int64_t k,
                                                    std::complex<T> z) {
  const ModularMatrix g = build_gamma(m, h, k);
  const std::complex<T> tau = (T(h) + kI<T> * z) / T(k);
  const std::complex<T> mt = T(m) * tau;
  TransformedArgument<T> out;
  out.tau = g.apply(mt);
  out.sigma = T(r) * tau * g.star(mt) + T(lambda(m, r, h, k).lambda) * out.tau;
  return out;
}

template <class T>
std::complex<T> transform_rhs(const ProductSpec& spec, std::int64_t h, std::int64_t k,
                              std::complex<T> z) {
  constexpr T pi = std::numbers::pi_v<T>;
  const ArcDatum datum = arc_datum(spec, h, k);
  const PhaseExponent phase = PhaseExponent(make_rational(spec.delta_sum(), 2)) + datum.phase;
  const T omega = to_floating<T>(omega_big(spec));
  const T delta = to_floating<T>(delta_arc(spec, h, k));
  std::complex<T> acc = phase.value<T>() * std::exp(pi / (T(12) * T(k)) * (omega * z + delta / z));
  for (const auto& f : spec.factors()) {
    const auto arg = transformed_argument<T>(f.m, f.r, h, k, z);
    acc *= std::pow(eval_zh(arg.sigma, arg.tau), static_cast<int>(f.delta));
  }
  return acc;
}

template <class T>
T check_main_transform(const ProductSpec& spec, std::int64_t h, std::int64_t k,
                       std::complex<T> z) {
  if (!(z.real() > 0)) throw std::domain_error("check_main_transform: Re(z) must be positive");
  const std::complex<T> tau = (T(h) + kI<T> * z) / T(k);
  const std::complex<T> lhs = eval_product(spec, tau);
  const std::complex<T> rhs = transform_rhs(spec, h, k, z);
  return std::abs(lhs - rhs) / std::abs(lhs);
}

std::vector<TransformSample> transform_test(const ProductSpec& spec, std::size_t samples,
                                            std::uint64_t seed, std::int64_t max_k,
                                            bool extended) {
  if (max_k < 1) throw std::invalid_argument("transform_test: max_k must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick_k(1, max_k);
  std::uniform_real_distribution<double> pick_re(0.2, 1.5), pick_im(-1.0, 1.0);
  std::vector<TransformSample> out(samples);
  for (auto& s : out) {
    s.k = pick_k(rng);
    std::uniform_int_distribution<std::int64_t> pick_h(0, s.k - 1);
    do {
      s.h = pick_h(rng);
    } while (std::gcd(s.h, s.k) != 1);
    s.z = {pick_re(rng), pick_im(rng)};
  }
  parallel_for(out.size(), [&](std::size_t i) {
    auto& s = out[i];
    if (extended) {
      s.discrepancy = static_cast<double>(check_main_transform<long double>(
          spec, s.h, s.k, std::complex<long double>(s.z.real(), s.z.imag())));
    } else {
      s.discrepancy = check_main_transform<double>(spec, s.h, s.k, s.z);
    }
  });
  return out;
}

#define QPROD_TRANSFORM_INSTANTIATE(T)                                                          \
  template std::complex<T> eval_eta<T>(std::complex<T>, std::int64_t);                          \
  template std::complex<T> eval_eta<T>(std::complex<T>);                                        \
  template std::complex<T> eval_theta<T>(std::complex<T>, std::complex<T>, std::int64_t);       \
  template std::complex<T> eval_theta<T>(std::complex<T>, std::complex<T>);                     \
  template std::complex<T> eval_zh<T>(std::complex<T>, std::complex<T>, std::int64_t);          \
  template std::complex<T> eval_zh<T>(std::complex<T>, std::complex<T>);                        \
  template std::complex<T> eval_zh_via_theta<T>(std::complex<T>, std::complex<T>);              \
  template std::complex<T> eval_Zh<T>(std::int64_t, std::int64_t, std::complex<T>,             \
                                      std::int64_t);                                            \
  template std::complex<T> eval_Zh<T>(std::int64_t, std::int64_t, std::complex<T>);             \
  template std::complex<T> chi<T>(const ModularMatrix&);                                        \
  template std::complex<T> eval_product<T>(const ProductSpec&, std::complex<T>);                \
  template TransformedArgument<T> transformed_argument<T>(std::int64_t, std::int64_t,           \
                                                          std::int64_t, std::int64_t,           \
                                                          std::complex<T>);                     \
  template TransformedArgument<T> transformed_argument_moebius<T>(                              \
      std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::complex<T>);                 \
  template std::complex<T> transform_rhs<T>(const ProductSpec&, std::int64_t, std::int64_t,     \
                                            std::complex<T>);                                   \
  template T check_main_transform<T>(const ProductSpec&, std::int64_t, std::int64_t,            \
                                     std::complex<T>);
QPROD_TRANSFORM_INSTANTIATE(double)
QPROD_TRANSFORM_INSTANTIATE(long double)

}  // namespace qprod
