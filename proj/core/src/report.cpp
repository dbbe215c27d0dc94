#include "qprod/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace qprod {

using Json = nlohmann::ordered_json;

std::string format15(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

double round15(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format15(x).c_str(), nullptr);
}

std::string format_from_log(int sign, double log_mag) {
  if (sign == 0 || std::isinf(log_mag)) return "0";
  const double l10 = log_mag / std::log(10.0);
  double e = std::floor(l10);
  double mant = std::pow(10.0, l10 - e);
  if (mant >= 9.999999999999995) {
    mant /= 10;
    e += 1;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s%.14fe%+.0f", sign < 0 ? "-" : "", mant, e);
  return buf;
}

std::string rational_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Json number_or_null(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round15(x);
}

Json classes_json(const std::vector<ArcClass>& classes) {
  Json arr = Json::array();
  for (const auto& c : classes) {
    arr.push_back({{"kappa", c.kappa}, {"ell", c.ell}, {"delta", rational_string(c.delta_value)}});
  }
  return arr;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string render_arcs(const ProductSpec& spec, OutputFormat format) {
  const auto parts = classify_arcs(spec);
  const auto assumption = check_assumption(spec);
  const Rational omega = omega_big(spec);
  if (format == OutputFormat::json) {
    Json violations = Json::array();
    for (const auto& v : assumption.violations) {
      violations.push_back({{"kappa", v.kappa},
                            {"ell", v.ell},
                            {"min_lhs", rational_string(v.min_lhs)},
                            {"rhs", rational_string(v.rhs)}});
    }
    Json doc;
    doc["spec"] = spec.to_string();
    doc["L"] = spec.modulus_lcm();
    doc["Omega"] = rational_string(omega);
    doc["major"] = classes_json(parts.positive);
    doc["minor"] = classes_json(parts.nonpositive);
    doc["assumption"] = {{"holds", assumption.holds}, {"violations", violations}};
    return dump(doc);
  }
  std::ostringstream os;
  os << "spec: " << spec.to_string() << "\n";
  os << "L = " << spec.modulus_lcm() << "\n";
  os << "Omega = " << rational_string(omega) << "\n";
  os << "major classes (Delta > 0): " << parts.positive.size() << "\n";
  for (const auto& c : parts.positive) {
    os << "  (" << c.kappa << "," << c.ell << ")  Delta = " << rational_string(c.delta_value) << "\n";
  }
  os << "minor classes (Delta <= 0): " << parts.nonpositive.size() << "\n";
  for (const auto& c : parts.nonpositive) {
    os << "  (" << c.kappa << "," << c.ell << ")  Delta = " << rational_string(c.delta_value) << "\n";
  }
  os << "assumption: " << (assumption.holds ? "true" : "false") << "\n";
  for (const auto& v : assumption.violations) {
    os << "  violated at (" << v.kappa << "," << v.ell << "): " << rational_string(v.min_lhs)
       << " < " << rational_string(v.rhs) << "\n";
  }
  return os.str();
}

std::string render_asymptotic(const ProductSpec& spec, const AsymptoticValue<long double>& value,
                              const std::string& precision, OutputFormat format) {
  const int sign = static_cast<int>(value.real_sign());
  const double log_re = static_cast<double>(value.log_abs_real());
  const double ratio = static_cast<double>(value.imag_ratio());
  if (format == OutputFormat::json) {
    Json doc;
    doc["spec"] = spec.to_string();
    doc["n"] = value.n;
    doc["K"] = value.K;
    doc["precision"] = precision;
    doc["terms"] = value.term_count;
    doc["sign"] = sign;
    doc["log_abs_real"] = number_or_null(log_re);
    doc["value"] = format_from_log(sign, log_re);
    doc["imag_ratio"] = number_or_null(ratio);
    return dump(doc);
  }
  std::ostringstream os;
  os << "spec: " << spec.to_string() << "\n";
  os << "n = " << value.n << ", K = " << value.K << ", terms = " << value.term_count
     << ", precision = " << precision << "\n";
  os << "g_asym(n) ~ " << format_from_log(sign, log_re) << "\n";
  os << "log|Re| = " << format15(log_re) << "\n";
  os << "|Im|/|Re| = " << format15(ratio) << "\n";
  return os.str();
}

std::string render_compare(const ProductSpec& spec, const std::vector<CompareRow>& rows,
                           OutputFormat format) {
  if (format == OutputFormat::json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n},
                     {"exact", r.exact.get_str()},
                     {"log_abs_exact", number_or_null(r.log_abs_exact)},
                     {"log_abs_asym", number_or_null(r.log_abs_asym)},
                     {"sign_exact", r.sign_exact},
                     {"sign_asym", r.sign_asym},
                     {"rel_error", number_or_null(r.rel_error)},
                     {"imag_ratio", number_or_null(r.imag_ratio)},
                     {"K", r.K}});
    }
    Json doc;
    doc["spec"] = spec.to_string();
    doc["rows"] = std::move(arr);
    return dump(doc);
  }
  std::ostringstream os;
  os << "n,exact,log_abs_exact,log_abs_asym,rel_error,imag_ratio,K\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.exact.get_str() << ',' << format15(r.log_abs_exact) << ','
       << format15(r.log_abs_asym) << ',' << format15(r.rel_error) << ','
       << format15(r.imag_ratio) << ',' << r.K << "\n";
  }
  return os.str();
}

std::string render_analysis(const ProductSpec& spec, const std::vector<DominantLevel>& levels,
                            const ResidueVerdict& verdict, OutputFormat format) {
  auto member_str = [](const LevelMember& m) {
    return "(" + std::to_string(m.kappa) + "," + std::to_string(m.ell) + "," +
           std::to_string(m.k) + ")";
  };
  if (format == OutputFormat::json) {
    Json lv = Json::array();
    for (const auto& l : levels) {
      Json members = Json::array();
      for (const auto& m : l.members) members.push_back({m.kappa, m.ell, m.k});
      lv.push_back({{"value", round15(l.value)},
                    {"value_squared", rational_string(l.value_squared)},
                    {"members", members}});
    }
    Json residues = Json::array();
    for (std::size_t b = 0; b < verdict.signs.size(); ++b) {
      residues.push_back({{"residue", b},
                          {"sign", to_string(verdict.signs[b])},
                          {"amplitude", number_or_null(verdict.amplitudes[b])}});
    }
    Json doc;
    doc["spec"] = spec.to_string();
    doc["levels"] = std::move(lv);
    doc["verdict"] = {{"level", verdict.level_index},
                      {"modulus", verdict.modulus},
                      {"inconclusive", verdict.inconclusive},
                      {"residues", residues},
                      {"evidence", "numerical"}};
    return dump(doc);
  }
  std::ostringstream os;
  os << "spec: " << spec.to_string() << "\n";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    os << "level " << i + 1 << ": sqrt(Delta)/k = " << format15(levels[i].value) << "  (squared "
       << rational_string(levels[i].value_squared) << ")  members:";
    for (const auto& m : levels[i].members) os << ' ' << member_str(m);
    os << "\n";
  }
  if (verdict.inconclusive) {
    os << "verdict: inconclusive at depth " << levels.size()
       << " (every examined level cancels for all n)\n";
    return os.str();
  }
  os << "verdict from level " << verdict.level_index + 1 << ", period " << verdict.modulus << ":\n";
  for (std::size_t b = 0; b < verdict.signs.size(); ++b) {
    os << "  n = " << b << " mod " << verdict.modulus << ": " << to_string(verdict.signs[b])
       << "  (amplitude " << format15(verdict.amplitudes[b]) << ")\n";
  }
  bool any_vanishing = false;
  for (auto s : verdict.signs) any_vanishing |= s == ResidueSign::vanishing;
  if (any_vanishing) os << "note: vanishing residues are numerical evidence, not a proof\n";
  return os.str();
}

std::string render_signs(const ProductSpec& spec, std::int64_t modulus, std::int64_t n_from,
                         std::int64_t n_to, const std::vector<ResidueSummary>& summary,
                         OutputFormat format) {
  if (format == OutputFormat::json) {
    Json arr = Json::array();
    for (const auto& s : summary) {
      arr.push_back({{"residue", s.residue},
                     {"pattern", to_string(s.pattern)},
                     {"count", s.count},
                     {"counterexample", s.counterexample ? Json(*s.counterexample) : Json(nullptr)}});
    }
    Json doc;
    doc["spec"] = spec.to_string();
    doc["modulus"] = modulus;
    doc["from"] = n_from;
    doc["to"] = n_to;
    doc["residues"] = std::move(arr);
    return dump(doc);
  }
  std::ostringstream os;
  os << "residue,pattern,count,counterexample\n";
  for (const auto& s : summary) {
    os << s.residue << ',' << to_string(s.pattern) << ',' << s.count << ','
       << (s.counterexample ? std::to_string(*s.counterexample) : "") << "\n";
  }
  return os.str();
}

std::string render_transform(const ProductSpec& spec, const std::vector<TransformSample>& samples,
                             double tolerance, OutputFormat format) {
  double worst = 0;
  std::size_t worst_i = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i].discrepancy <= worst)) {
      worst = samples[i].discrepancy;
      worst_i = i;
    }
  }
  const bool ok = worst < tolerance;
  if (format == OutputFormat::json) {
    Json arr = Json::array();
    for (const auto& s : samples) {
      arr.push_back({{"h", s.h},
                     {"k", s.k},
                     {"z", {round15(s.z.real()), round15(s.z.imag())}},
                     {"discrepancy", number_or_null(s.discrepancy)}});
    }
    Json doc;
    doc["spec"] = spec.to_string();
    doc["samples"] = samples.size();
    doc["max_discrepancy"] = number_or_null(worst);
    doc["tolerance"] = tolerance;
    doc["pass"] = ok;
    doc["results"] = std::move(arr);
    return dump(doc);
  }
  std::ostringstream os;
  os << "spec: " << spec.to_string() << "\n";
  os << "samples: " << samples.size() << "\n";
  os << "max discrepancy: " << format15(worst);
  if (!samples.empty()) {
    const auto& s = samples[worst_i];
    os << " at h/k = " << s.h << "/" << s.k << ", z = " << format15(s.z.real())
       << (s.z.imag() < 0 ? " - " : " + ") << format15(std::abs(s.z.imag())) << "i";
  }
  os << "\n" << (ok ? "PASS" : "FAIL") << " (tolerance " << format15(tolerance) << ")\n";
  return os.str();
}

}  // namespace qprod
