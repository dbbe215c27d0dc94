#include "qprod/arith.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace qprod {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q{BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))};
  q.canonicalize();
  return q;
}

BigInt floor(const Rational& x) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

BigInt ceil(const Rational& x) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

Rational mod(const Rational& x, std::int64_t modulus) {
  if (modulus <= 0) throw std::invalid_argument("mod: modulus must be positive");
  const Rational m{BigInt(static_cast<long>(modulus))};
  Rational quotient{x / m};
  Rational out{x - m * Rational(floor(quotient))};
  out.canonicalize();
  return out;
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t gcd0(std::int64_t a, std::int64_t b) {
  if (a == 0) return b;
  return std::gcd(a, b);
}

std::int64_t lcm_all(std::span<const std::int64_t> ms) {
  if (ms.empty()) throw std::invalid_argument("lcm_all: empty sequence");
  std::int64_t acc = 1;
  for (std::int64_t m : ms) {
    if (m <= 0) throw std::invalid_argument("lcm_all: entries must be positive");
    acc = std::lcm(acc, m);
  }
  return acc;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("mod_inverse: modulus must be positive");
  if (n == 1) return 0;
  std::int64_t old_r = mod(a, n), r = n;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw std::invalid_argument("mod_inverse: " + std::to_string(a) + " is not invertible mod " +
                                std::to_string(n));
  }
  return mod(old_s, n);
}

std::int64_t hbar(std::int64_t m, std::int64_t h, std::int64_t k) {
  const std::int64_t d = std::gcd(m, k);
  const std::int64_t modulus = k / d;
  if (modulus == 1) return 0;
  const std::int64_t a = mod((m / d) * h, modulus);
  const std::int64_t x = mod(-mod_inverse(a, modulus), modulus);
  BigInt check = BigInt(static_cast<long>(x)) * a + 1;
  if (mpz_divisible_ui_p(check.get_mpz_t(), static_cast<unsigned long>(modulus)) == 0) {
    throw std::logic_error("hbar: congruence check failed");
  }
  return x;
}

Rational sawtooth(const Rational& x) {
  if (x.get_den() == 1) return Rational(0);
  Rational out{x - Rational(floor(x)) - Rational(1, 2)};
  out.canonicalize();
  return out;
}

Rational dedekind_sum(std::int64_t d, std::int64_t c) {
  if (c <= 0) throw std::invalid_argument("dedekind_sum: c must be positive");
  // ((dn/c))((n/c)) = (2 r_n - c)(2n - c) / (4c^2) with r_n = dn mod c, zero when r_n = 0.
  const std::int64_t dr = mod(d, c);
  BigInt acc = 0;
  std::int64_t rn = 0;
  for (std::int64_t n = 1; n < c; ++n) {
    rn += dr;
    if (rn >= c) rn -= c;
    if (rn == 0) continue;
    BigInt term = BigInt(static_cast<long>(2 * rn - c));
    term *= static_cast<long>(2 * n - c);
    acc += term;
  }
  Rational out{acc, BigInt(static_cast<long>(4)) * c * c};
  out.canonicalize();
  return out;
}

Rational dedekind_sum_reciprocity(std::int64_t d, std::int64_t c) {
  if (c <= 0) throw std::invalid_argument("dedekind_sum_reciprocity: c must be positive");
  if (std::gcd(mod(d, c), c) != 1) {
    throw std::invalid_argument("dedekind_sum_reciprocity: gcd(d, c) must be 1");
  }
  // s(d,c) + s(c,d) = -1/4 + (d/c + c/d + 1/(cd)) / 12, applied along the Euclidean chain.
  std::int64_t a = mod(d, c), b = c;
  Rational acc = 0;
  int sign = 1;
  while (a != 0) {
    const Rational ra = make_rational(a), rb = make_rational(b);
    Rational reciprocity{(ra / rb + rb / ra + 1 / (ra * rb)) / 12 - Rational(1, 4)};
    if (sign > 0) {
      acc += reciprocity;
    } else {
      acc -= reciprocity;
    }
    sign = -sign;
    const std::int64_t next = b % a;
    b = a;
    a = next;
  }
  acc.canonicalize();
  return acc;
}

}  // namespace qprod
