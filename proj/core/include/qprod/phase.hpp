#pragma once

#include <complex>

#include "qprod/arith.hpp"

namespace qprod {

/// The unit complex number e^{pi i t}, with t kept exactly and reduced to [0, 2).
class PhaseExponent {
 public:
  PhaseExponent() = default;
  explicit PhaseExponent(const Rational& t) : t_(mod(t, 2)) {}

  const Rational& exponent() const noexcept { return t_; }

  PhaseExponent& operator+=(const PhaseExponent& o) {
    t_ = mod(t_ + o.t_, 2);
    return *this;
  }
  friend PhaseExponent operator+(PhaseExponent a, const PhaseExponent& b) { return a += b; }
  PhaseExponent operator-() const { return PhaseExponent(-t_); }
  friend bool operator==(const PhaseExponent& a, const PhaseExponent& b) { return a.t_ == b.t_; }

  template <class T>
  std::complex<T> value() const;

 private:
  Rational t_ = 0;
};

extern template std::complex<double> PhaseExponent::value<double>() const;
extern template std::complex<long double> PhaseExponent::value<long double>() const;

}  // namespace qprod
