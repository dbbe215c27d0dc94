#pragma once

// Truncated Rademacher-type expansion of g(n):
//
//   g(n) ~ 2 pi i^{sum delta} sum_{(kappa,ell) major} ((24n + Omega) / Delta)^{-1/2}
//            sum_{k = ell mod L, k <= K} (1/k) I_{-1}(pi/(6k) sqrt(Delta (24n + Omega)))
//            sum_{h = kappa mod ell, gcd(h,k) = 1} e^{-2 pi i n h / k} phase(h,k) Pi_{h,k}

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qprod/arcs.hpp"
#include "qprod/log_complex.hpp"

namespace qprod {

/// Raised when the hypothesis of the expansion is not met (assumption check
/// fails or n <= -Omega/24).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// floor(sqrt(2 pi (n + Omega/24))), at least 1.
std::int64_t default_K(const ProductSpec& spec, std::int64_t n);

/// The weighted sum over admissible h of one (kappa, ell, k) block, including
/// the global i^{sum delta} but excluding the Bessel factor.
template <class T>
std::complex<T> h_sum(const ProductSpec& spec, std::int64_t kappa, std::int64_t ell,
                      std::int64_t k, std::int64_t n, std::int64_t hbar_shift = 0);

/// One Bessel term of the expansion, in log form.
template <class T>
struct BesselTerm {
  std::int64_t kappa = 0;
  std::int64_t ell = 1;
  std::int64_t k = 1;
  LogComplex<T> value;
};

template <class T>
struct AsymptoticValue {
  std::int64_t n = 0;
  std::int64_t K = 0;
  LogComplex<T> value;
  std::size_t term_count = 0;

  T real_sign() const { return value.real_sign(); }
  T log_abs_real() const { return value.log_abs_real(); }
  /// |Im| / |Re|
  T imag_ratio() const { return std::exp(value.log_abs_imag() - value.log_abs_real()); }
};

/// 2 pi (24n + Omega)^{-1/2} (sqrt(Delta)/k) I_{-1}(pi/(6k) sqrt(Delta (24n + Omega))).
template <class T>
LogComplex<T> bessel_factor(const Rational& omega, const Rational& delta, std::int64_t k,
                            std::int64_t n);

/// Every nonzero Bessel term with k <= K, ordered by (ell, kappa, k).
/// Throws HypothesisError under the same conditions as g_asymptotic.
template <class T>
std::vector<BesselTerm<T>> asymptotic_terms(const ProductSpec& spec, std::int64_t n,
                                            std::int64_t K);

/// The truncated expansion at n; K defaults to default_K(spec, n).
template <class T>
AsymptoticValue<T> g_asymptotic(const ProductSpec& spec, std::int64_t n,
                                std::optional<std::int64_t> K = std::nullopt);

#define QPROD_ASYMPTOTICS_EXTERN(T)                                                          \
  extern template std::complex<T> h_sum<T>(const ProductSpec&, std::int64_t, std::int64_t,   \
                                           std::int64_t, std::int64_t, std::int64_t);        \
  extern template LogComplex<T> bessel_factor<T>(const Rational&, const Rational&,           \
                                                 std::int64_t, std::int64_t);                \
  extern template std::vector<BesselTerm<T>> asymptotic_terms<T>(const ProductSpec&,         \
                                                                 std::int64_t, std::int64_t); \
  extern template AsymptoticValue<T> g_asymptotic<T>(const ProductSpec&, std::int64_t,       \
                                                     std::optional<std::int64_t>);
QPROD_ASYMPTOTICS_EXTERN(double)
QPROD_ASYMPTOTICS_EXTERN(long double)
#undef QPROD_ASYMPTOTICS_EXTERN

}  // namespace qprod
