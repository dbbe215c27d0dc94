// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "qprod/analysis.hpp"
#include "qprod/asymptotics.hpp"
#include "qprod/bessel.hpp"
#include "qprod/transform.hpp"

using namespace qprod;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
const cd kI{0, 1};

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "first failure: " << what;
      ok = false;
    }
  }
};

double rel(cd a, cd b) { return std::abs(a - b) / std::abs(b); }

std::vector<ProductSpec> example_specs() {
  return {specs::rogers_ramanujan(), specs::continued_fraction(), specs::b_product()};
}

using Pairs = std::vector<std::pair<long, long>>;

void ac1(Outcome& out) {
  const std::vector<std::pair<Rational, long>> consts{{Rational(-2, 5), 5}, {Rational(24, 5), 5}, {Rational(-8), 10}};
  const std::vector<Pairs> lists{
      {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}, {0, 5}, {1, 5}, {4, 5}},
      {{2, 5}, {3, 5}},
      {{0, 1}, {0, 3}, {1, 3}, {2, 3}, {0, 5}, {2, 5}, {3, 5}, {0, 7}, {1, 7}, {2, 7}, {3, 7},
       {4, 7}, {5, 7}, {6, 7}, {0, 9}, {1, 9}, {2, 9}, {3, 9}, {4, 9}, {5, 9}, {6, 9}, {7, 9},
       {8, 9}, {1, 10}, {2, 10}, {3, 10}, {4, 10}, {6, 10}, {7, 10}, {8, 10}, {9, 10}}};
  const auto s = example_specs();
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.require(omega_big(s[i]) == consts[i].first, "Omega of spec " + s[i].to_string());
    out.require(s[i].modulus_lcm() == consts[i].second, "L of spec " + s[i].to_string());
    Pairs got;
    for (const auto& c : classify_arcs(s[i]).positive) got.emplace_back(c.kappa, c.ell);
    out.require(got == lists[i], "major classes of " + s[i].to_string());
    out.require(check_assumption(s[i]).holds, "assumption for " + s[i].to_string());
  }
  out.detail << "Omega, L, 13/2/31 major classes, assumption";
}

void ac2(Outcome& out) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> pick_n(0, 200);
  for (int i = 0; i < 100; ++i) {
    const auto s = oracle::random_spec(rng);
    const std::size_t N = pick_n(rng);
    out.require(expand_spec(s, N) == oracle_expand(s, N), "random spec " + s.to_string());
  }
  for (const auto& s : example_specs()) {
    out.require(expand_spec(s, 2000) == oracle_expand(s, 2000), "N=2000 for " + s.to_string());
  }
  out.detail << "100 random specs and 3 specs at N=2000";
}

void ac3(Outcome& out) {
  std::size_t count = 0;
  double worst = 0;
  std::uint64_t seed = 1;
  for (const auto& s : example_specs()) {
    for (const auto& t : transform_test(s, 50, seed++)) {
      worst = std::max(worst, t.discrepancy);
      ++count;
    }
  }
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    const auto s = oracle::random_spec(rng, 3, 12, 2);
    for (const auto& t : transform_test(s, 1, seed++)) {
      worst = std::max(worst, t.discrepancy);
      ++count;
    }
  }
  out.require(count >= 150 && worst < 1e-9, "main transformation discrepancy");

  double eta_w = 0, th1_w = 0, th2_w = 0, jtp_w = 0;
  std::mt19937_64 g(7);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  std::uniform_int_distribution<int> ab(-2, 2);
  for (int i = 0; i < 50; ++i) {
    const auto [a, b, c, d] = oracle::random_sl2z(g);
    const ModularMatrix m{a, b, c, d};
    const cd tau = oracle::random_tau(g);
    const cd j = double(c) * tau + double(d);
    const cd x = chi<double>(m);
    eta_w = std::max(eta_w, rel(eval_eta(m.apply(tau)), x * std::sqrt(j) * eval_eta(tau)));

    const cd s(u(g), u(g) * tau.imag());
    const cd lhs1 = eval_theta(s * m.star(tau), m.apply(tau));
    const cd rhs1 = x * x * x * std::sqrt(j) * std::exp(kPi * kI * double(c) * s * s / j) * eval_theta(s, tau);
    th1_w = std::max(th1_w, rel(lhs1, rhs1));

    const int al = ab(g), be = ab(g);
    const cd lhs2 = eval_theta(s + double(al) * tau + double(be), tau);
    const cd rhs2 = ((al + be) % 2 == 0 ? 1.0 : -1.0) * std::exp(-kPi * kI * double(al * al) * tau) *
                    std::exp(-2 * kPi * kI * double(al) * s) * eval_theta(s, tau);
    th2_w = std::max(th2_w, rel(lhs2, rhs2));

    const cd zeta = std::exp(2 * kPi * kI * s), q = std::exp(2 * kPi * kI * tau);
    cd prod = 1, qn = 1;
    for (int n = 0; n < 400; ++n) {
      prod *= (1.0 - zeta * qn) * (1.0 - qn * q / zeta) * (1.0 - qn * q);
      qn *= q;
    }
    const cd rhs3 = -kI * std::exp(2 * kPi * kI * tau / 8.0) * std::exp(-kPi * kI * s) * prod;
    jtp_w = std::max(jtp_w, rel(eval_theta(s, tau), rhs3));
  }
  out.require(eta_w < 1e-10, "eta transformation");
  out.require(th1_w < 1e-10, "theta modular transformation");
  out.require(th2_w < 1e-10, "theta quasi-periodicity");
  out.require(jtp_w < 1e-10, "Jacobi triple product");
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%zu samples max %.2e; eta %.1e theta1 %.1e theta2 %.1e triple %.1e", count,
                worst, eta_w, th1_w, th2_w, jtp_w);
  out.detail << buf;
}

void ac4(Outcome& out) {
  const std::vector<std::int64_t> ns{200, 500, 1000};
  for (const auto& s : {specs::rogers_ramanujan(), specs::continued_fraction()}) {
    const auto rows = compare(s, ns, std::nullopt, Precision::extended);
    double prev = INFINITY;
    for (const auto& r : rows) {
      const double e = std::abs(r.rel_error);
      out.require(r.sign_asym == r.sign_exact, "sign at n=" + std::to_string(r.n));
      out.require(e < 1e-6, "error at n=" + std::to_string(r.n) + " for " + s.to_string());
      out.require(e < prev, "decrease at n=" + std::to_string(r.n) + " for " + s.to_string());
      prev = e;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.1e ", e);
      out.detail << buf;
    }
  }
}

void ac5(Outcome& out) {
  const std::int64_t n = 1000;
  const auto top = g_asymptotic<double>(specs::rogers_ramanujan(), n, 1);
  const double log51 = std::log(1 / std::sin(kPi / 5) / (4 * std::pow(3.0, 0.25) * std::pow(5.0, 0.25))) -
                       0.75 * std::log(double(n)) + 2 * kPi * std::sqrt(n / 15.0);
  const double ratio51 = std::exp(top.log_abs_real() - log51);
  out.require(top.real_sign() > 0 && std::abs(ratio51 - 1) < 0.05, "single-level term vs closed form");

  const auto C = expand_spec(specs::continued_fraction(), 1000);
  std::ostringstream ratios;
  for (std::int64_t m : {500, 1000}) {
    const double c = std::cos(4 * kPi / 5 * (m + 3.0 / 20));
    const double logc = std::log(std::sqrt(2.0) / std::pow(5.0, 0.75) * std::abs(c)) -
                        0.75 * std::log(double(m)) + 4 * kPi / 5 * std::sqrt(m / 5.0);
    const double ratio = std::exp(static_cast<double>(log_abs(C[m])) - logc);
    out.require(sgn(C[m]) == (c > 0 ? 1 : -1), "C(n) sign at " + std::to_string(m));
    out.require(std::abs(ratio - 1) < 0.05, "C(n) magnitude at " + std::to_string(m));
    char buf[48];
    std::snprintf(buf, sizeof buf, " C(%ld) %.4f", static_cast<long>(m), ratio);
    ratios << buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "ratio %.4f;", ratio51);
  out.detail << buf << ratios.str();
}

void ac6(Outcome& out) {
  const std::vector<std::vector<LevelMember>> expect{
      {{0, 1, 1}, {0, 5, 5}}, {{2, 5, 5}, {3, 5, 5}}, {{0, 1, 1}, {0, 5, 5}, {2, 5, 5}, {3, 5, 5}}};
  const auto s = example_specs();
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.require(dominant_levels(s[i], 1).at(0).members == expect[i], "members of " + s[i].to_string());
  }
  out.detail << "2, 2 and 4 members";
}

void ac7(Outcome& out) {
  const auto B = expand_spec(specs::b_product(), 5004);
  for (std::int64_t n = 0; n <= 400; ++n) out.require(sgn(B[5 * n + 1]) == 0, "B(5n+1) at n=" + std::to_string(n));
  const auto t = sign_check(B, 5, 250, 5004);
  for (long r : {0, 2, 3}) out.require(t[r].pattern == SignPattern::all_positive, "B residue " + std::to_string(r));
  out.require(t[4].pattern == SignPattern::all_negative, "B residue 4");

  const auto c = sign_check(specs::continued_fraction(), 5, 250, 5004);
  for (long r : {0, 2}) out.require(c[r].pattern == SignPattern::all_positive, "C residue " + std::to_string(r));
  for (long r : {1, 3, 4}) out.require(c[r].pattern == SignPattern::all_negative, "C residue " + std::to_string(r));

  const auto v = leading_profile(specs::b_product());
  bool only_one = v.modulus == 5 && !v.inconclusive;
  for (long r = 0; r < 5 && only_one; ++r) {
    only_one = (v.signs[r] == ResidueSign::vanishing) == (r == 1);
  }
  out.require(only_one, "leading profile vanishing set");
  out.detail << "B(5n+1)=0 to n=400; signs over 5n+b, 50<=n<=1000; vanishing at 1 mod 5";
}

void ac8(Outcome& out) {
  for (const auto& s : example_specs()) {
    for (long k = 1; k <= 60; ++k) {
      for (long h = 0; h < k; ++h) {
        if (std::gcd(h, k) != 1) continue;
        const auto base = arc_datum(s, h, k);
        const auto pv = base.pi_value<double>();
        for (long c = 1; c <= 3; ++c) {
          const auto sh = arc_datum(s, h, k, c);
          out.require(sh.phase == base.phase, "hbar shift phase");
          out.require(std::abs(sh.pi_value<double>() - pv) <= 1e-12 * std::abs(pv), "hbar shift Pi");
        }
        const auto [kappa, ell] = residue_class(s, h, k);
        out.require(delta_arc(s, h, k) == delta_arc(s, kappa, ell), "Delta class invariance");
      }
    }
  }
  for (long c = 1; c <= 200; ++c) {
    for (long d = 1; d <= 200; ++d) {
      if (std::gcd(c, d) != 1) continue;
      const Rational s = dedekind_sum(d, c);
      const Rational recip = Rational(-1, 4) + (Rational(d, c) + Rational(c, d) + Rational(1, c * d)) / 12;
      out.require(s + dedekind_sum(c, d) == recip, "reciprocity");
      out.require(dedekind_sum(-d, c) == -s, "oddness");
      out.require(dedekind_sum_reciprocity(d, c) == s, "Euclidean route");
    }
  }
  double worst_im = 0;
  for (const auto& s : example_specs()) {
    for (std::int64_t n : {50, 200, 500, 1000}) {
      if (s == specs::b_product() && n % 5 == 1) continue;
      worst_im = std::max(worst_im, static_cast<double>(g_asymptotic<double>(s, n).imag_ratio()));
    }
  }
  out.require(worst_im < 1e-8, "realness");
  double worst_b = 0;
  for (double x = 20; x <= 30; x += 0.05) {
    worst_b = std::max(worst_b, std::abs(std::expm1(log_bessel_i1_series(x) - log_bessel_i1_asymptotic(x))));
  }
  out.require(worst_b < 1e-11, "Bessel branch agreement");
  char buf[96];
  std::snprintf(buf, sizeof buf, "Im/Re %.1e; Bessel branches %.1e", worst_im, worst_b);
  out.detail << buf;
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;  // 0 = no runtime bound
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> all{
      {"AC1", "constants and major classes", 1, ac1},
      {"AC2", "exact expansion cross-validation", 60, ac2},
      {"AC3", "transformation formula and identities", 0, ac3},
      {"AC4", "asymptotic vs exact at n=200,500,1000", 30, ac4},
      {"AC5", "leading-term closed forms", 0, ac5},
      {"AC6", "dominant-level members", 0, ac6},
      {"AC7", "congruence and sign phenomena", 0, ac7},
      {"AC8", "invariant suites", 30, ac8},
  };
  int failed = 0;
  for (const auto& c : all) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      out.ok = false;
      out.detail << "; runtime over " << c.limit_seconds << " s";
    }
    std::printf("%s %s  %-40s %7.2fs  %s\n", out.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                out.detail.str().c_str());
    failed += out.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
