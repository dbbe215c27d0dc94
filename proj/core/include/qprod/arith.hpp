#pragma once

// Exact integer and rational primitives: gcd/lcm conventions, modular
// inverses, the canonical hbar residue and Dedekind sums.

#include <cstdint>
#include <span>

#include <gmpxx.h>

namespace qprod {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Reduced fraction h/k with 0 <= h < k and gcd(h, k) = 1.
struct FareyPair {
  std::int64_t h = 0;
  std::int64_t k = 1;

  friend bool operator==(const FareyPair&, const FareyPair&) = default;
};

/// Builds num/den in canonical (reduced, positive denominator) form.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

BigInt floor(const Rational& x);
BigInt ceil(const Rational& x);

/// x mod modulus, in [0, modulus).
Rational mod(const Rational& x, std::int64_t modulus);

/// Nonnegative residue of a mod n (n > 0).
std::int64_t mod(std::int64_t a, std::int64_t n);

/// gcd with the convention gcd0(0, n) = n.
std::int64_t gcd0(std::int64_t a, std::int64_t b);

/// Throws std::invalid_argument on an empty sequence or a nonpositive entry.
std::int64_t lcm_all(std::span<const std::int64_t> ms);

/// Inverse of a modulo n; requires gcd(a, n) = 1 and n >= 1. Returns 0 when n = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t n);

/// Least nonnegative integer x with x * (m h / gcd(m,k)) = -1 mod k/gcd(m,k).
/// Returns 0 when that modulus is 1.
std::int64_t hbar(std::int64_t m, std::int64_t h, std::int64_t k);

/// Dedekind sum s(d, c) by direct summation over n mod c.
/// Throws std::invalid_argument when c <= 0.
Rational dedekind_sum(std::int64_t d, std::int64_t c);

/// Dedekind sum through repeated reciprocity, O(log c). Requires gcd(d, c) = 1.
Rational dedekind_sum_reciprocity(std::int64_t d, std::int64_t c);

/// Sawtooth ((x)).
Rational sawtooth(const Rational& x);

}  // namespace qprod
