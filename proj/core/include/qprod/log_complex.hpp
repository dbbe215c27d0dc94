#pragma once

// Complex numbers stored as (log|z|, arg z) so that Bessel-sized magnitudes
// (e^x with x well past 709) survive in double precision.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

namespace qprod {

template <class T>
struct LogComplex {
  T log_mag = -std::numeric_limits<T>::infinity();
  T arg = 0;  // in (-pi, pi]

  static T wrap(T a) {
    constexpr T pi = std::numbers::pi_v<T>;
    a = std::remainder(a, 2 * pi);
    if (a <= -pi) a += 2 * pi;
    return a;
  }

  static LogComplex zero() { return {}; }
  static LogComplex from_log(T log_mag, T arg = 0) { return {log_mag, wrap(arg)}; }
  static LogComplex from_complex(std::complex<T> z) {
    if (z == std::complex<T>(0)) return zero();
    return {std::log(std::abs(z)), std::arg(z)};
  }

  bool is_zero() const { return std::isinf(log_mag) && log_mag < 0; }

  LogComplex& operator*=(const LogComplex& o) {
    if (is_zero() || o.is_zero()) return *this = zero();
    log_mag += o.log_mag;
    arg = wrap(arg + o.arg);
    return *this;
  }
  friend LogComplex operator*(LogComplex a, const LogComplex& b) { return a *= b; }

  /// a + b, factoring out the larger magnitude.
  friend LogComplex operator+(const LogComplex& a, const LogComplex& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const LogComplex& big = a.log_mag >= b.log_mag ? a : b;
    const LogComplex& small = a.log_mag >= b.log_mag ? b : a;
    const std::complex<T> w = std::polar(std::exp(small.log_mag - big.log_mag), small.arg - big.arg);
    const std::complex<T> s = T(1) + w;
    if (s == std::complex<T>(0)) return zero();
    return {big.log_mag + std::log(std::abs(s)), wrap(big.arg + std::arg(s))};
  }

  /// The value scaled by e^{-shift}; lossless for moderate magnitudes.
  std::complex<T> scaled(T shift) const {
    if (is_zero()) return {0, 0};
    return std::polar(std::exp(log_mag - shift), arg);
  }
  std::complex<T> to_complex() const { return scaled(0); }

  T real_sign() const {
    const T c = std::cos(arg);
    return c > 0 ? T(1) : (c < 0 ? T(-1) : T(0));
  }
  /// log|Re z|
  T log_abs_real() const { return log_mag + std::log(std::abs(std::cos(arg))); }
  /// log|Im z|
  T log_abs_imag() const { return log_mag + std::log(std::abs(std::sin(arg))); }
};

/// Neumaier-compensated complex accumulator.
template <class T>
class CompensatedSum {
 public:
  void add(std::complex<T> z) {
    add_part(sum_re_, comp_re_, z.real());
    add_part(sum_im_, comp_im_, z.imag());
  }
  std::complex<T> value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

 private:
  static void add_part(T& sum, T& comp, T x) {
    const T t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  T sum_re_ = 0, comp_re_ = 0, sum_im_ = 0, comp_im_ = 0;
};

/// Sum of log-form terms: factor out the largest magnitude, then sum compensated.
/// The result depends only on the order of `terms`.
template <class T>
LogComplex<T> log_sum(std::span<const LogComplex<T>> terms) {
  T top = -std::numeric_limits<T>::infinity();
  for (const auto& t : terms) top = std::max(top, t.log_mag);
  if (std::isinf(top)) return LogComplex<T>::zero();
  CompensatedSum<T> acc;
  for (const auto& t : terms) acc.add(t.scaled(top));
  const std::complex<T> s = acc.value();
  if (s == std::complex<T>(0)) return LogComplex<T>::zero();
  return {top + std::log(std::abs(s)), std::arg(s)};
}

}  // namespace qprod
