#include "qprod/qseries.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qprod {

ProductSpec::ProductSpec(std::vector<ProductFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("ProductSpec: at least one factor required");
  std::vector<std::int64_t> moduli;
  moduli.reserve(factors_.size());
  for (const auto& f : factors_) {
    if (f.m < 2 || f.r < 1 || f.r >= f.m) {
      throw std::invalid_argument("ProductSpec: need 1 <= r < m, got m=" + std::to_string(f.m) +
                                  " r=" + std::to_string(f.r));
    }
    if (f.delta == 0) throw std::invalid_argument("ProductSpec: delta must be nonzero");
    moduli.push_back(f.m);
  }
  lcm_ = lcm_all(moduli);
}

std::int64_t ProductSpec::delta_sum() const noexcept {
  std::int64_t s = 0;
  for (const auto& f : factors_) s += f.delta;
  return s;
}

ProductSpec ProductSpec::inverse() const {
  auto flipped = factors_;
  for (auto& f : flipped) f.delta = -f.delta;
  return ProductSpec(std::move(flipped));
}

std::string ProductSpec::to_string() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (j) os << ' ';
    os << factors_[j].m << ':' << factors_[j].r << ':' << factors_[j].delta;
  }
  return os.str();
}

CoeffSeries CoeffSeries::one(std::size_t order) {
  std::vector<BigInt> c(order + 1, BigInt(0));
  c[0] = 1;
  return CoeffSeries(std::move(c));
}

void apply_factor_inplace(CoeffSeries& series, std::int64_t t, FactorDirection direction) {
  if (t <= 0) throw std::invalid_argument("apply_factor: exponent must be positive");
  auto& c = series.coeffs;
  const auto stride = static_cast<std::size_t>(t);
  if (stride >= c.size()) return;
  if (direction == FactorDirection::multiply) {
    for (std::size_t n = c.size() - 1; n >= stride; --n) c[n] -= c[n - stride];
  } else {
    for (std::size_t n = stride; n < c.size(); ++n) c[n] += c[n - stride];
  }
}

CoeffSeries apply_factor(CoeffSeries series, std::int64_t t, FactorDirection direction) {
  apply_factor_inplace(series, t, direction);
  return series;
}

CoeffSeries expand_spec(const ProductSpec& spec, std::size_t order) {
  auto out = CoeffSeries::one(order);
  const auto n_max = static_cast<std::int64_t>(order);
  for (const auto& f : spec.factors()) {
    const auto dir = f.delta > 0 ? FactorDirection::multiply : FactorDirection::divide;
    const std::int64_t reps = f.delta > 0 ? f.delta : -f.delta;
    for (std::int64_t base : {f.r, f.m - f.r}) {
      for (std::int64_t e = base; e <= n_max; e += f.m) {
        for (std::int64_t i = 0; i < reps; ++i) apply_factor_inplace(out, e, dir);
      }
    }
  }
  return out;
}

namespace series {

std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                             std::size_t order) {
  std::vector<BigInt> out(order + 1, BigInt(0));
  std::vector<std::size_t> nz_b;
  for (std::size_t j = 0; j < b.size() && j <= order; ++j) {
    if (sgn(b[j]) != 0) nz_b.push_back(j);
  }
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j : nz_b) {
      if (i + j > order) break;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<BigInt> invert(const std::vector<BigInt>& a, std::size_t order) {
  if (a.empty() || a[0] != 1) throw std::invalid_argument("invert: constant term must be 1");
  // Newton: g <- g (2 - a g), doubling the precision each step.
  std::vector<BigInt> g{BigInt(1)};
  std::size_t prec = 1;
  while (prec < order + 1) {
    prec = std::min(2 * prec, order + 1);
    auto ag = convolve(a, g, prec - 1);
    for (auto& x : ag) x = -x;
    ag[0] += 2;
    g = convolve(g, ag, prec - 1);
  }
  g.resize(order + 1, BigInt(0));
  return g;
}

}  // namespace series

namespace {

// (q^a; q^m)_inf truncated at q^order, one binomial (1 - q^e) at a time.
std::vector<BigInt> pochhammer(std::int64_t a, std::int64_t m, std::size_t order) {
  std::vector<BigInt> p(order + 1, BigInt(0));
  p[0] = 1;
  for (auto e = static_cast<std::size_t>(a); e <= order; e += static_cast<std::size_t>(m)) {
    std::vector<BigInt> binomial(e + 1, BigInt(0));
    binomial[0] = 1;
    binomial[e] = -1;
    p = series::convolve(p, binomial, order);
  }
  return p;
}

}  // namespace

CoeffSeries oracle_expand(const ProductSpec& spec, std::size_t order) {
  std::vector<BigInt> total(order + 1, BigInt(0));
  total[0] = 1;
  for (const auto& f : spec.factors()) {
    const auto block =
        series::convolve(pochhammer(f.r, f.m, order), pochhammer(f.m - f.r, f.m, order), order);
    const std::int64_t reps = f.delta > 0 ? f.delta : -f.delta;
    std::vector<BigInt> powered = block;
    for (std::int64_t i = 1; i < reps; ++i) powered = series::convolve(powered, block, order);
    if (f.delta < 0) powered = series::invert(powered, order);
    total = series::convolve(total, powered, order);
  }
  return CoeffSeries(std::move(total));
}

std::string series_to_csv(const CoeffSeries& series) {
  std::string out = "n,g(n)\n";
  for (std::size_t n = 0; n < series.coeffs.size(); ++n) {
    out += std::to_string(n);
    out += ',';
    out += series.coeffs[n].get_str();
    out += '\n';
  }
  return out;
}

std::string series_to_json(const ProductSpec& spec, const CoeffSeries& series) {
  nlohmann::ordered_json doc;
  doc["spec"] = spec.to_string();
  doc["order"] = series.order();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : series.coeffs) arr.push_back(c.get_str());
  doc["coefficients"] = std::move(arr);
  return doc.dump(2) + "\n";
}

long double log_abs(const BigInt& x) {
  if (sgn(x) == 0) throw std::domain_error("log_abs: zero");
  BigInt a = abs(x);
  const auto bits = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
  long shift = bits > 64 ? bits - 64 : 0;
  BigInt top;
  mpz_tdiv_q_2exp(top.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  const auto mant = static_cast<long double>(mpz_get_ui(top.get_mpz_t()));
  return std::log(mant) + static_cast<long double>(shift) * std::log(2.0L);
}

template <class T>
T to_floating(const BigInt& x) {
  if (x.fits_slong_p()) return static_cast<T>(x.get_si());
  BigInt a = abs(x);
  const auto bits = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
  const long shift = bits - 64;
  BigInt top;
  mpz_tdiv_q_2exp(top.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  const T v = std::ldexp(static_cast<T>(mpz_get_ui(top.get_mpz_t())), static_cast<int>(shift));
  return sgn(x) < 0 ? -v : v;
}

template double to_floating<double>(const BigInt&);
template long double to_floating<long double>(const BigInt&);

}  // namespace qprod
