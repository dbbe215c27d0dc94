#pragma once

#include "qprod/log_complex.hpp"

namespace qprod {

/// Switch point between the ascending series and the large-argument expansion.
inline constexpr double kBesselSeriesLimit = 25.0;

/// log I_1(x) from the ascending series sum (x/2)^{2k+1} / (k! (k+1)!).
template <class T>
T log_bessel_i1_series(T x);

/// log I_1(x) from the exponentially scaled large-x expansion, with at least
/// `min_terms` correction terms and stopping at the smallest term.
template <class T>
T log_bessel_i1_asymptotic(T x, int min_terms = 6);

/// I_{-1}(x) = I_1(x) for x > 0 in log form. Throws std::domain_error for x <= 0.
template <class T>
LogComplex<T> bessel_I_minus1(T x);

extern template double log_bessel_i1_series<double>(double);
extern template long double log_bessel_i1_series<long double>(long double);
extern template double log_bessel_i1_asymptotic<double>(double, int);
extern template long double log_bessel_i1_asymptotic<long double>(long double, int);
extern template LogComplex<double> bessel_I_minus1<double>(double);
extern template LogComplex<long double> bessel_I_minus1<long double>(long double);

}  // namespace qprod
