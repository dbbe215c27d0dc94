#pragma once

// Text / CSV / JSON renderings used by the command-line tool. Exact integers
// are always decimal strings in JSON, rationals are "p/q", and floating
// values carry 15 significant digits.

#include <cstdint>
#include <string>
#include <vector>

#include "qprod/analysis.hpp"
#include "qprod/arcs.hpp"
#include "qprod/transform.hpp"

namespace qprod {

enum class OutputFormat { text, csv, json };

/// "%.15g", with "nan" / "inf" spelled out.
std::string format15(double x);
/// x rounded to 15 significant digits.
double round15(double x);
/// sign * e^{log_mag} in scientific notation, e.g. "-1.23456789012345e+4000".
std::string format_from_log(int sign, double log_mag);
std::string rational_string(const Rational& q);

std::string render_arcs(const ProductSpec& spec, OutputFormat format);

std::string render_asymptotic(const ProductSpec& spec, const AsymptoticValue<long double>& value,
                              const std::string& precision, OutputFormat format);

std::string render_compare(const ProductSpec& spec, const std::vector<CompareRow>& rows,
                           OutputFormat format);

std::string render_analysis(const ProductSpec& spec, const std::vector<DominantLevel>& levels,
                            const ResidueVerdict& verdict, OutputFormat format);

std::string render_signs(const ProductSpec& spec, std::int64_t modulus, std::int64_t n_from,
                         std::int64_t n_to, const std::vector<ResidueSummary>& summary,
                         OutputFormat format);

std::string render_transform(const ProductSpec& spec, const std::vector<TransformSample>& samples,
                             double tolerance, OutputFormat format);

}  // namespace qprod
