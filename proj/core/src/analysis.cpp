#include "qprod/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <tuple>
#include <stdexcept>

#include "qprod/parallel.hpp"

namespace qprod {

std::vector<DominantLevel> dominant_levels(const ProductSpec& spec, std::size_t depth) {
  const auto major = classify_arcs(spec).positive;
  if (major.empty()) throw HypothesisError("no major arcs: every class has Delta <= 0");
  const std::int64_t L = spec.modulus_lcm();

  struct Candidate {
    Rational key;  // Delta / k^2
    std::size_t cls;
    std::int64_t k;
  };
  auto less = [](const Candidate& a, const Candidate& b) { return a.key < b.key; };
  std::priority_queue<Candidate, std::vector<Candidate>, decltype(less)> heap(less);
  auto key_of = [&](std::size_t cls, std::int64_t k) {
    Rational key{major[cls].delta_value / Rational(BigInt(static_cast<long>(k * k)))};
    key.canonicalize();
    return key;
  };
  for (std::size_t c = 0; c < major.size(); ++c) heap.push({key_of(c, major[c].ell), c, major[c].ell});

  std::vector<DominantLevel> levels;
  while (!heap.empty() && levels.size() < depth) {
    const Rational current = heap.top().key;
    DominantLevel level;
    level.value_squared = current;
    level.value = std::sqrt(current.get_d());
    while (!heap.empty() && heap.top().key == current) {
      const Candidate top = heap.top();
      heap.pop();
      level.members.push_back({major[top.cls].kappa, major[top.cls].ell, top.k});
      heap.push({key_of(top.cls, top.k + L), top.cls, top.k + L});
    }
    std::sort(level.members.begin(), level.members.end(), [](const auto& a, const auto& b) {
      return std::tie(a.k, a.ell, a.kappa) < std::tie(b.k, b.ell, b.kappa);
    });
    levels.push_back(std::move(level));
  }
  return levels;
}

std::complex<double> level_amplitude(const ProductSpec& spec, const DominantLevel& level,
                                     std::int64_t n) {
  CompensatedSum<double> acc;
  for (const auto& m : level.members) acc.add(h_sum<double>(spec, m.kappa, m.ell, m.k, n));
  return acc.value();
}

namespace {

// Sum of |phase * Pi| over every admissible h of the level: the size the
// amplitude would have without cancellation.
double level_scale(const ProductSpec& spec, const DominantLevel& level) {
  double scale = 0;
  for (const auto& m : level.members) {
    for (std::int64_t h = m.kappa; h < m.k; h += m.ell) {
      if (std::gcd(h, m.k) != 1) continue;
      scale += std::abs(arc_datum(spec, h, m.k).pi_value<double>());
    }
  }
  return scale;
}

}  // namespace

ResidueVerdict leading_profile(const ProductSpec& spec, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("leading_profile: depth must be positive");
  const auto levels = dominant_levels(spec, depth);
  ResidueVerdict verdict;
  for (std::size_t li = 0; li < levels.size(); ++li) {
    const auto& level = levels[li];
    std::int64_t period = 1;
    for (const auto& m : level.members) period = std::lcm(period, m.k);
    std::vector<double> amp(static_cast<std::size_t>(period));
    double max_abs = 0;
    for (std::int64_t n = 0; n < period; ++n) {
      const auto a = level_amplitude(spec, level, n);
      amp[static_cast<std::size_t>(n)] = a.real();
      max_abs = std::max(max_abs, std::abs(a));
    }
    verdict.level_index = li;
    verdict.level = level;
    const double scale = level_scale(spec, level);
    if (scale == 0 || max_abs < kVanishingThreshold * scale) {
      verdict.inconclusive = true;
      continue;
    }
    verdict.inconclusive = false;
    const double tol = kVanishingThreshold * max_abs;
    // Smallest divisor P of the full period with A(n) = A(n mod P).
    std::int64_t fundamental = period;
    for (std::int64_t p = 1; p < period; ++p) {
      if (period % p != 0) continue;
      bool periodic = true;
      for (std::int64_t n = p; n < period && periodic; ++n) {
        periodic = std::abs(amp[static_cast<std::size_t>(n)] -
                            amp[static_cast<std::size_t>(n % p)]) <= tol;
      }
      if (periodic) {
        fundamental = p;
        break;
      }
    }
    verdict.modulus = fundamental;
    verdict.amplitudes.assign(amp.begin(), amp.begin() + fundamental);
    verdict.signs.clear();
    for (double a : verdict.amplitudes) {
      if (std::abs(a) < tol) {
        verdict.signs.push_back(ResidueSign::vanishing);
      } else {
        verdict.signs.push_back(a > 0 ? ResidueSign::positive : ResidueSign::negative);
      }
    }
    return verdict;
  }
  verdict.modulus = 1;
  verdict.signs.clear();
  verdict.amplitudes.clear();
  return verdict;
}

namespace {

template <class T>
void fill_asymptotic(const ProductSpec& spec, CompareRow& row, std::optional<std::int64_t> K) {
  const auto a = g_asymptotic<T>(spec, row.n, K);
  row.K = a.K;
  row.sign_asym = static_cast<int>(a.real_sign());
  row.log_abs_asym = static_cast<double>(a.log_abs_real());
  row.imag_ratio = static_cast<double>(a.imag_ratio());
  if (row.sign_exact == 0) {
    row.rel_error = std::numeric_limits<double>::quiet_NaN();
    return;
  }
  const long double diff = a.log_abs_real() - log_abs(row.exact);
  if (row.sign_asym == row.sign_exact) {
    row.rel_error = static_cast<double>(std::expm1(diff));
  } else {
    row.rel_error = static_cast<double>(-std::exp(diff) - 1);
  }
}

}  // namespace

std::vector<CompareRow> compare(const ProductSpec& spec, const CoeffSeries& exact,
                                const std::vector<std::int64_t>& n_values,
                                std::optional<std::int64_t> K, Precision precision) {
  for (std::int64_t n : n_values) {
    if (n < 0 || static_cast<std::size_t>(n) > exact.order()) {
      throw std::out_of_range("compare: n = " + std::to_string(n) + " beyond expansion order");
    }
  }
  std::vector<CompareRow> rows(n_values.size());
  parallel_for(rows.size(), [&](std::size_t i) {
    CompareRow& row = rows[i];
    row.n = n_values[i];
    row.exact = exact[static_cast<std::size_t>(row.n)];
    row.sign_exact = sgn(row.exact);
    row.log_abs_exact = row.sign_exact == 0 ? std::numeric_limits<double>::quiet_NaN()
                                            : static_cast<double>(log_abs(row.exact));
    if (precision == Precision::extended) {
      fill_asymptotic<long double>(spec, row, K);
    } else {
      fill_asymptotic<double>(spec, row, K);
    }
  });
  return rows;
}

std::vector<CompareRow> compare(const ProductSpec& spec, const std::vector<std::int64_t>& n_values,
                                std::optional<std::int64_t> K, Precision precision) {
  if (n_values.empty()) return {};
  const std::int64_t top = *std::max_element(n_values.begin(), n_values.end());
  if (top < 0) throw std::invalid_argument("compare: n must be nonnegative");
  return compare(spec, expand_spec(spec, static_cast<std::size_t>(top)), n_values, K, precision);
}

std::vector<ResidueSummary> sign_check(const CoeffSeries& series, std::int64_t modulus,
                                       std::int64_t n_from, std::int64_t n_to) {
  if (modulus < 1) throw std::invalid_argument("sign_check: modulus must be positive");
  if (n_from < 0 || n_to < n_from) throw std::invalid_argument("sign_check: bad range");
  if (static_cast<std::size_t>(n_to) > series.order()) {
    throw std::out_of_range("sign_check: range end " + std::to_string(n_to) +
                            " exceeds truncation order " + std::to_string(series.order()));
  }
  std::vector<ResidueSummary> out(static_cast<std::size_t>(modulus));
  std::vector<int> first_sign(out.size(), 2);
  for (std::int64_t b = 0; b < modulus; ++b) out[static_cast<std::size_t>(b)].residue = b;
  for (std::int64_t n = n_from; n <= n_to; ++n) {
    auto& s = out[static_cast<std::size_t>(n % modulus)];
    int& first = first_sign[static_cast<std::size_t>(n % modulus)];
    const int sg = sgn(series[static_cast<std::size_t>(n)]);
    ++s.count;
    if (first == 2) {
      first = sg;
      s.pattern = sg > 0 ? SignPattern::all_positive
                         : (sg < 0 ? SignPattern::all_negative : SignPattern::all_zero);
    } else if (sg != first && !s.counterexample) {
      s.pattern = SignPattern::mixed;
      s.counterexample = n;
    }
  }
  return out;
}

std::vector<ResidueSummary> sign_check(const ProductSpec& spec, std::int64_t modulus,
                                       std::int64_t n_from, std::int64_t n_to) {
  if (n_to < 0) throw std::invalid_argument("sign_check: bad range");
  return sign_check(expand_spec(spec, static_cast<std::size_t>(n_to)), modulus, n_from, n_to);
}

std::string to_string(ResidueSign s) {
  switch (s) {
    case ResidueSign::positive: return "positive";
    case ResidueSign::negative: return "negative";
    case ResidueSign::vanishing: return "vanishing";
  }
  return "?";
}

std::string to_string(SignPattern p) {
  switch (p) {
    case SignPattern::all_positive: return "all-positive";
    case SignPattern::all_negative: return "all-negative";
    case SignPattern::all_zero: return "all-zero";
    case SignPattern::mixed: return "mixed";
    case SignPattern::empty: return "empty";
  }
  return "?";
}

}  // namespace qprod
