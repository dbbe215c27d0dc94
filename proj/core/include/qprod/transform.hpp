#pragma once

// Numerical eta / theta / Zh evaluation and the modular transformation of
// G(e^{2 pi i tau}) around a Farey fraction h/k.

#include <complex>
#include <cstdint>
#include <vector>

#include "qprod/phase.hpp"
#include "qprod/qseries.hpp"

namespace qprod {

/// [[a, b], [c, d]] in SL_2(Z).
struct ModularMatrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const { return a * d - b * c; }

  template <class T>
  std::complex<T> apply(std::complex<T> tau) const {
    return (T(a) * tau + T(b)) / (T(c) * tau + T(d));
  }
  /// 1 / (c tau + d)
  template <class T>
  std::complex<T> star(std::complex<T> tau) const {
    return T(1) / (T(c) * tau + T(d));
  }

  friend bool operator==(const ModularMatrix&, const ModularMatrix&) = default;
};

/// gamma_(m,h,k) = [[hbar, -b], [k', -m' h]] with m' = m/gcd(m,k), k' = k/gcd(m,k)
/// and b = (hbar m' h + 1) / k'.
ModularMatrix build_gamma(std::int64_t m, std::int64_t h, std::int64_t k);

/// Product length with |q|^terms below e^{-2 pi * 60 / ...}: ceil(60 / Im tau).
std::int64_t product_terms(double im_tau);

/// eta(tau) = q^{1/24} (q; q)_inf. Throws std::domain_error when Im tau <= 0.
template <class T>
std::complex<T> eval_eta(std::complex<T> tau, std::int64_t terms);
template <class T>
std::complex<T> eval_eta(std::complex<T> tau);

/// theta(s; tau) = sum over nu in Z + 1/2 with |nu| <= terms + 1/2.
template <class T>
std::complex<T> eval_theta(std::complex<T> sigma, std::complex<T> tau, std::int64_t terms);
/// Chooses the truncation from the Gaussian decay of the terms.
template <class T>
std::complex<T> eval_theta(std::complex<T> sigma, std::complex<T> tau);

/// Zh(s; tau) = (zeta, zeta^{-1} q; q)_inf as a direct truncated product.
template <class T>
std::complex<T> eval_zh(std::complex<T> sigma, std::complex<T> tau, std::int64_t terms);
template <class T>
std::complex<T> eval_zh(std::complex<T> sigma, std::complex<T> tau);

/// Zh(s; tau) = i e^{-pi i tau / 6} e^{pi i s} theta(s; tau) / eta(tau).
template <class T>
std::complex<T> eval_zh_via_theta(std::complex<T> sigma, std::complex<T> tau);

/// (q^r, q^{m-r}; q^m)_inf with q = e^{2 pi i tau}, i.e. Zh(r tau; m tau).
template <class T>
std::complex<T> eval_Zh(std::int64_t r, std::int64_t m, std::complex<T> tau, std::int64_t terms);
template <class T>
std::complex<T> eval_Zh(std::int64_t r, std::int64_t m, std::complex<T> tau);

/// Exponent of the eta multiplier: (a+d)/(12c) - s(d,c) - 1/4. Requires c > 0.
PhaseExponent chi_exponent(const ModularMatrix& gamma);
template <class T>
std::complex<T> chi(const ModularMatrix& gamma);

/// G(e^{2 pi i tau}) evaluated as the product itself.
template <class T>
std::complex<T> eval_product(const ProductSpec& spec, std::complex<T> tau);

/// Transformed arguments for one factor at tau = (h + i z)/k.
template <class T>
struct TransformedArgument {
  std::complex<T> sigma;  // r tau gamma*(m tau) + lambda gamma(m tau)
  std::complex<T> tau;    // gamma(m tau)
};

/// Closed forms: tau~ = hbar d / k + i d^2 / (m k z),
/// sigma~ = r d/(m k) + lambda hbar d / k + i lambda* d^2 / (m k z).
template <class T>
TransformedArgument<T> transformed_argument(std::int64_t m, std::int64_t r, std::int64_t h,
                                            std::int64_t k, std::complex<T> z);
/// Same quantities from the Moebius action of build_gamma on m tau.
template <class T>
TransformedArgument<T> transformed_argument_moebius(std::int64_t m, std::int64_t r,
                                                    std::int64_t h, std::int64_t k,
                                                    std::complex<T> z);

/// Right-hand side of the transformation formula at tau = (h + i z)/k.
template <class T>
std::complex<T> transform_rhs(const ProductSpec& spec, std::int64_t h, std::int64_t k,
                              std::complex<T> z);

/// |LHS - RHS| / |LHS| with LHS = G(e^{2 pi i tau}). Requires gcd(h,k) = 1 and Re z > 0.
template <class T>
T check_main_transform(const ProductSpec& spec, std::int64_t h, std::int64_t k,
                       std::complex<T> z);

struct TransformSample {
  std::int64_t h = 0;
  std::int64_t k = 1;
  std::complex<double> z;
  double discrepancy = 0;
};

/// Draws `samples` random (h, k <= max_k, z) with a seeded generator and evaluates
/// check_main_transform for each; samples are evaluated in parallel but the
/// draw sequence depends only on `seed`.
std::vector<TransformSample> transform_test(const ProductSpec& spec, std::size_t samples,
                                            std::uint64_t seed, std::int64_t max_k = 20,
                                            bool extended = false);

#define QPROD_TRANSFORM_EXTERN(T)                                                              \
  extern template std::complex<T> eval_eta<T>(std::complex<T>, std::int64_t);                  \
  extern template std::complex<T> eval_eta<T>(std::complex<T>);                                \
  extern template std::complex<T> eval_theta<T>(std::complex<T>, std::complex<T>,              \
                                                std::int64_t);                                 \
  extern template std::complex<T> eval_theta<T>(std::complex<T>, std::complex<T>);             \
  extern template std::complex<T> eval_zh<T>(std::complex<T>, std::complex<T>, std::int64_t);  \
  extern template std::complex<T> eval_zh<T>(std::complex<T>, std::complex<T>);                \
  extern template std::complex<T> eval_zh_via_theta<T>(std::complex<T>, std::complex<T>);      \
  extern template std::complex<T> eval_Zh<T>(std::int64_t, std::int64_t, std::complex<T>,      \
                                             std::int64_t);                                    \
  extern template std::complex<T> eval_Zh<T>(std::int64_t, std::int64_t, std::complex<T>);     \
  extern template std::complex<T> chi<T>(const ModularMatrix&);                                \
  extern template std::complex<T> eval_product<T>(const ProductSpec&, std::complex<T>);        \
  extern template TransformedArgument<T> transformed_argument<T>(                              \
      std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::complex<T>);                \
  extern template TransformedArgument<T> transformed_argument_moebius<T>(                      \
      std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::complex<T>);                \
  extern template std::complex<T> transform_rhs<T>(const ProductSpec&, std::int64_t,           \
                                                   std::int64_t, std::complex<T>);             \
  extern template T check_main_transform<T>(const ProductSpec&, std::int64_t, std::int64_t,    \
                                            std::complex<T>);
QPROD_TRANSFORM_EXTERN(double)
QPROD_TRANSFORM_EXTERN(long double)
#undef QPROD_TRANSFORM_EXTERN

}  // namespace qprod
