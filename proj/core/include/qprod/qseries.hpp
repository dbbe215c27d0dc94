#pragma once

// Exact truncated expansion of
//   G(q) = prod_j (q^{r_j}, q^{m_j - r_j}; q^{m_j})_inf^{delta_j}
// with arbitrary-precision integer coefficients.

#include <cstdint>
#include <string>
#include <vector>

#include "qprod/arith.hpp"

namespace qprod {

/// One (q^r, q^{m-r}; q^m)_inf^delta block of the product.
struct ProductFactor {
  std::int64_t m = 1;
  std::int64_t r = 0;
  std::int64_t delta = 0;

  friend bool operator==(const ProductFactor&, const ProductFactor&) = default;
};

/// The triple (m, r, delta). Construction enforces 1 <= r < m and delta != 0.
class ProductSpec {
 public:
  explicit ProductSpec(std::vector<ProductFactor> factors);

  const std::vector<ProductFactor>& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  const ProductFactor& operator[](std::size_t j) const { return factors_[j]; }

  /// lcm of all moduli.
  std::int64_t modulus_lcm() const noexcept { return lcm_; }
  /// Sum of the exponents delta_j.
  std::int64_t delta_sum() const noexcept;

  /// Same moduli and residues with every delta negated (the reciprocal product).
  ProductSpec inverse() const;

  /// Canonical textual form, e.g. "5:2:-2 10:2:1 10:4:2".
  std::string to_string() const;

  friend bool operator==(const ProductSpec& a, const ProductSpec& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<ProductFactor> factors_;
  std::int64_t lcm_ = 1;
};

/// Coefficients g(0..N) of a truncated power series.
struct CoeffSeries {
  std::vector<BigInt> coeffs;

  CoeffSeries() = default;
  explicit CoeffSeries(std::vector<BigInt> c) : coeffs(std::move(c)) {}

  /// The series 1 + O(q^{N+1}).
  static CoeffSeries one(std::size_t order);

  std::size_t order() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const BigInt& operator[](std::size_t n) const { return coeffs[n]; }
  BigInt& operator[](std::size_t n) { return coeffs[n]; }

  friend bool operator==(const CoeffSeries&, const CoeffSeries&) = default;
};

enum class FactorDirection { multiply, divide };

/// In place: multiply by (1 - q^t) or divide by it. Throws on t = 0.
void apply_factor_inplace(CoeffSeries& series, std::int64_t t, FactorDirection direction);
CoeffSeries apply_factor(CoeffSeries series, std::int64_t t, FactorDirection direction);

/// Exact g(0..order) by stride difference / prefix-sum updates, one per factor.
CoeffSeries expand_spec(const ProductSpec& spec, std::size_t order);

/// Independent route: dense Pochhammer polynomials, powers by convolution,
/// Newton inversion for negative exponents, then a final convolution.
CoeffSeries oracle_expand(const ProductSpec& spec, std::size_t order);

namespace series {

/// Schoolbook product truncated at q^order.
std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                             std::size_t order);
/// Reciprocal of a series with constant term 1, truncated at q^order.
std::vector<BigInt> invert(const std::vector<BigInt>& a, std::size_t order);

}  // namespace series

/// "n,g(n)" header followed by one decimal row per coefficient.
std::string series_to_csv(const CoeffSeries& series);
/// {"spec": ..., "order": N, "coefficients": ["1", ...]} with decimal-string coefficients.
std::string series_to_json(const ProductSpec& spec, const CoeffSeries& series);

/// Natural log of |x| for a nonzero big integer, to long double accuracy.
long double log_abs(const BigInt& x);

/// Converts a big integer to T, keeping the top 64 bits.
template <class T>
T to_floating(const BigInt& x);

template <class T>
T to_floating(const Rational& x) {
  return to_floating<T>(BigInt(x.get_num())) / to_floating<T>(BigInt(x.get_den()));
}

extern template double to_floating<double>(const BigInt&);
extern template long double to_floating<long double>(const BigInt&);

}  // namespace qprod
