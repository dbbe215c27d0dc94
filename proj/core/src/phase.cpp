#include "qprod/phase.hpp"

#include <cmath>
#include <numbers>

#include "qprod/qseries.hpp"

namespace qprod {

template <class T>
std::complex<T> PhaseExponent::value() const {
  // Exact quarter-turns first so that 1, i, -1, -i come out exactly.
  const Rational quarter{t_ * 2};
  if (quarter.get_den() == 1) {
    switch (quarter.get_num().get_si()) {
      case 0: return {T(1), T(0)};
      case 1: return {T(0), T(1)};
      case 2: return {T(-1), T(0)};
      default: return {T(0), T(-1)};
    }
  }
  // Fold into (-1, 1] before scaling by pi.
  Rational centered{t_ > 1 ? Rational(t_ - 2) : t_};
  const T angle = std::numbers::pi_v<T> * to_floating<T>(centered);
  return {std::cos(angle), std::sin(angle)};
}

template std::complex<double> PhaseExponent::value<double>() const;
template std::complex<long double> PhaseExponent::value<long double>() const;

}  // namespace qprod
