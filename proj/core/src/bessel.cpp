#include "qprod/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qprod {

template <class T>
T log_bessel_i1_series(T x) {
  if (!(x > 0)) throw std::domain_error("bessel: argument must be positive");
  // Terms are positive; scale by the first term to keep the sum near 1.
  const T y = x * x / 4;
  T term = 1, sum = 1;
  for (int k = 1; k < 10000; ++k) {
    term *= y / (T(k) * T(k + 1));
    sum += term;
    if (term < sum * std::numeric_limits<T>::epsilon() / 4) break;
  }
  return std::log(x / 2) + std::log(sum);
}

template <class T>
T log_bessel_i1_asymptotic(T x, int min_terms) {
  if (!(x > 0)) throw std::domain_error("bessel: argument must be positive");
  // I_s(x) ~ e^x / sqrt(2 pi x) * sum_k (-1)^k prod_{j<=k} (4s^2 - (2j-1)^2) / (k! (8x)^k), s = -1.
  constexpr T mu = 4;
  T term = 1, sum = 1, prev_abs = 1;
  for (int k = 1; k < 200; ++k) {
    const T odd = T(2 * k - 1);
    term *= -(mu - odd * odd) / (T(k) * 8 * x);
    const T a = std::abs(term);
    if (k > min_terms && a > prev_abs) break;
    sum += term;
    prev_abs = a;
    if (k >= min_terms && a < std::numeric_limits<T>::epsilon() * std::abs(sum) / 4) break;
  }
  return x - T(0.5) * std::log(2 * std::numbers::pi_v<T> * x) + std::log(sum);
}

template <class T>
LogComplex<T> bessel_I_minus1(T x) {
  if (!(x > 0)) throw std::domain_error("bessel_I_minus1: argument must be positive");
  const T log_value = x <= T(kBesselSeriesLimit) ? log_bessel_i1_series(x)
                                                   : log_bessel_i1_asymptotic(x);
  return LogComplex<T>::from_log(log_value, 0);
}

template double log_bessel_i1_series<double>(double);
template long double log_bessel_i1_series<long double>(long double);
template double log_bessel_i1_asymptotic<double>(double, int);
template long double log_bessel_i1_asymptotic<long double>(long double, int);
template LogComplex<double> bessel_I_minus1<double>(double);
template LogComplex<long double> bessel_I_minus1<long double>(long double);

}  // namespace qprod
