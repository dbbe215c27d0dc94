#pragma once

// Dominant-term analysis of the expansion: ranking of the growth levels
// sqrt(Delta)/k, the periodic amplitude of the leading level, exact-vs-
// asymptotic comparison, and sign scans of exact coefficients.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qprod/asymptotics.hpp"
#include "qprod/qseries.hpp"

namespace qprod {

struct LevelMember {
  std::int64_t kappa = 0;
  std::int64_t ell = 1;
  std::int64_t k = 1;

  friend bool operator==(const LevelMember&, const LevelMember&) = default;
};

struct DominantLevel {
  Rational value_squared;  // Delta / k^2, exact
  double value = 0;        // sqrt(Delta) / k
  std::vector<LevelMember> members;  // ordered by (k, ell, kappa)
};

/// The `depth` largest distinct values of sqrt(Delta(kappa,ell))/k over major
/// classes and k = ell mod L, in decreasing order.
/// Throws HypothesisError when there are no major classes.
std::vector<DominantLevel> dominant_levels(const ProductSpec& spec, std::size_t depth);

/// i^{sum delta} times the sum of all h-sums of a level at n; the level's common
/// Bessel factor is bessel_factor(Omega, Delta, k, n) of any member.
std::complex<double> level_amplitude(const ProductSpec& spec, const DominantLevel& level,
                                     std::int64_t n);

enum class ResidueSign { positive, negative, vanishing };

struct ResidueVerdict {
  std::int64_t modulus = 1;                 // fundamental period of the amplitude
  std::vector<ResidueSign> signs;           // one per residue mod `modulus`
  std::vector<double> amplitudes;           // Re A(n) per residue
  std::size_t level_index = 0;              // 0-based level the verdict comes from
  DominantLevel level;
  bool inconclusive = false;                // every examined level vanished everywhere
};

/// Relative threshold below which an amplitude counts as vanishing.
inline constexpr double kVanishingThreshold = 1e-9;

ResidueVerdict leading_profile(const ProductSpec& spec, std::size_t depth = 3);

struct CompareRow {
  std::int64_t n = 0;
  BigInt exact;
  double log_abs_exact = 0;   // NaN when g(n) = 0
  double log_abs_asym = 0;    // log |Re g_asym(n)|
  int sign_exact = 0;
  int sign_asym = 0;
  double rel_error = 0;       // g_asym / g(n) - 1; NaN when g(n) = 0
  double imag_ratio = 0;      // |Im| / |Re| of g_asym(n)
  std::int64_t K = 0;
};

enum class Precision { double_precision, extended };

/// Exact coefficients from expand_spec, approximations from g_asymptotic,
/// compared in log space. Rows follow the order of `n_values`.
std::vector<CompareRow> compare(const ProductSpec& spec, const std::vector<std::int64_t>& n_values,
                                std::optional<std::int64_t> K = std::nullopt,
                                Precision precision = Precision::double_precision);
/// Same, reusing an existing expansion. Throws std::out_of_range if an n exceeds it.
std::vector<CompareRow> compare(const ProductSpec& spec, const CoeffSeries& exact,
                                const std::vector<std::int64_t>& n_values,
                                std::optional<std::int64_t> K = std::nullopt,
                                Precision precision = Precision::double_precision);

enum class SignPattern { all_positive, all_negative, all_zero, mixed, empty };

struct ResidueSummary {
  std::int64_t residue = 0;
  SignPattern pattern = SignPattern::empty;
  std::size_t count = 0;
  /// First n whose sign differs from the first n of this class.
  std::optional<std::int64_t> counterexample;
};

/// Scans g(n), n_from <= n <= n_to, split by n mod modulus.
std::vector<ResidueSummary> sign_check(const ProductSpec& spec, std::int64_t modulus,
                                       std::int64_t n_from, std::int64_t n_to);
/// Throws std::out_of_range when n_to exceeds the truncation of `series`.
std::vector<ResidueSummary> sign_check(const CoeffSeries& series, std::int64_t modulus,
                                       std::int64_t n_from, std::int64_t n_to);

std::string to_string(ResidueSign s);
std::string to_string(SignPattern p);

}  // namespace qprod
