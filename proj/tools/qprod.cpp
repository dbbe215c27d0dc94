// qprod: exact and asymptotic coefficients of
//   prod_j (q^{r_j}, q^{m_j - r_j}; q^{m_j})_inf^{delta_j}
//
// Products are given as m:r:delta triples, e.g.
//   qprod expand 5:1:-1 --order 20
//   qprod analyze 5:2:-2 10:2:1 10:4:2

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qprod/analysis.hpp"
#include "qprod/report.hpp"
#include "qprod/spec_document.hpp"
#include "qprod/transform.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitHypothesis = 2;

struct Common {
  std::vector<std::string> spec_tokens;
  std::string out_path;
  std::string format;
};

qprod::OutputFormat to_format(const std::string& s) {
  if (s == "json") return qprod::OutputFormat::json;
  if (s == "csv") return qprod::OutputFormat::csv;
  return qprod::OutputFormat::text;
}

void emit(const Common& c, const std::string& body) {
  if (c.out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(c.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + c.out_path);
  out << body;
}

void add_common(CLI::App* sub, Common& c, const std::vector<std::string>& formats) {
  sub->add_option("spec", c.spec_tokens, "Product as m:r:delta triples")->required();
  sub->add_option("--out", c.out_path, "Write output to FILE instead of stdout");
  c.format = formats.front();
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw CLI::ValidationError("--range", "expected a..b");
  try {
    return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--range", "expected integers a..b, got '" + s + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and asymptotic Taylor coefficients of infinite q-products"};
  app.require_subcommand(1);

  Common c;
  std::size_t order = 100;
  std::int64_t n = 0;
  std::optional<std::int64_t> K;
  std::vector<std::int64_t> n_list;
  std::size_t depth = 3;
  std::int64_t modulus = 5;
  std::string range = "0..100";
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  std::int64_t max_k = 20;
  double tolerance = 1e-9;
  std::string precision = "double";

  auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--precision", precision, "Floating backend")
        ->check(CLI::IsMember({"double", "extended"}))
        ->capture_default_str();
  };

  auto* expand = app.add_subcommand("expand", "Exact coefficients g(0..N)");
  add_common(expand, c, {"csv", "json"});
  expand->add_option("--order", order, "Truncation order N")->capture_default_str();

  auto* arcs = app.add_subcommand("arcs", "Omega, L, major/minor classes and the assumption check");
  add_common(arcs, c, {"text", "json"});

  auto* asym = app.add_subcommand("asym", "Truncated asymptotic expansion at n");
  add_common(asym, c, {"text", "json"});
  asym->add_option("--n", n, "Coefficient index")->required();
  asym->add_option("--K", K, "Truncation of the k-sum (default floor(sqrt(2 pi (n + Omega/24))))");
  add_precision(asym);

  auto* cmp = app.add_subcommand("compare", "Exact vs asymptotic values");
  add_common(cmp, c, {"csv", "json"});
  cmp->add_option("--n-list", n_list, "Indices to compare")->required()->delimiter(',');
  cmp->add_option("--K", K, "Fixed k-sum truncation");
  add_precision(cmp);

  auto* analyze = app.add_subcommand("analyze", "Dominant levels and residue-class verdicts");
  add_common(analyze, c, {"text", "json"});
  analyze->add_option("--depth", depth, "Number of levels to examine")->capture_default_str();

  auto* signs = app.add_subcommand("signs", "Sign pattern of exact coefficients per residue class");
  add_common(signs, c, {"csv", "json"});
  signs->add_option("--mod", modulus, "Modulus")->capture_default_str();
  signs->add_option("--range", range, "Index range a..b (inclusive)")->capture_default_str();

  auto* trans = app.add_subcommand("transform-test", "Check the modular transformation numerically");
  add_common(trans, c, {"text", "json"});
  trans->add_option("--samples", samples, "Number of random (h, k, z)")->capture_default_str();
  trans->add_option("--seed", seed, "Random seed")->capture_default_str();
  trans->add_option("--max-k", max_k, "Largest denominator k")->capture_default_str();
  trans->add_option("--tolerance", tolerance, "Pass threshold")->capture_default_str();
  add_precision(trans);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  const auto fmt = to_format(c.format);
  const bool extended = precision == "extended";
  try {
    const qprod::ProductSpec spec = qprod::parse_spec(c.spec_tokens);
    if (*expand) {
      const auto series = qprod::expand_spec(spec, order);
      emit(c, fmt == qprod::OutputFormat::json ? qprod::series_to_json(spec, series)
                                               : qprod::series_to_csv(series));
    } else if (*arcs) {
      emit(c, qprod::render_arcs(spec, fmt));
    } else if (*asym) {
      qprod::AsymptoticValue<long double> v;
      if (extended) {
        v = qprod::g_asymptotic<long double>(spec, n, K);
      } else {
        const auto d = qprod::g_asymptotic<double>(spec, n, K);
        v = {d.n, d.K, {d.value.log_mag, d.value.arg}, d.term_count};
      }
      emit(c, qprod::render_asymptotic(spec, v, precision, fmt));
    } else if (*cmp) {
      const auto rows = qprod::compare(
          spec, n_list, K,
          extended ? qprod::Precision::extended : qprod::Precision::double_precision);
      emit(c, qprod::render_compare(spec, rows, fmt));
    } else if (*analyze) {
      const auto levels = qprod::dominant_levels(spec, depth);
      const auto verdict = qprod::leading_profile(spec, depth);
      emit(c, qprod::render_analysis(spec, levels, verdict, fmt));
    } else if (*signs) {
      const auto [from, to] = parse_range(range);
      const auto summary = qprod::sign_check(spec, modulus, from, to);
      emit(c, qprod::render_signs(spec, modulus, from, to, summary, fmt));
    } else if (*trans) {
      const auto results = qprod::transform_test(spec, samples, seed, max_k, extended);
      emit(c, qprod::render_transform(spec, results, tolerance, fmt));
    }
  } catch (const qprod::SpecParseError& e) {
    std::cerr << "qprod: spec error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qprod::HypothesisError& e) {
    std::cerr << "qprod: hypothesis not satisfied: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const std::out_of_range& e) {
    std::cerr << "qprod: precondition failed: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "qprod: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qprod: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qprod: error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
