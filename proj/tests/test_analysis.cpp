#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "qprod/analysis.hpp"

using namespace qprod;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<LevelMember> top_members(const ProductSpec& s) {
  return dominant_levels(s, 1).at(0).members;
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("dominant level members") {
  CHECK(top_members(specs::rogers_ramanujan()) == std::vector<LevelMember>{{0, 1, 1}, {0, 5, 5}});
  CHECK(top_members(specs::continued_fraction()) == std::vector<LevelMember>{{2, 5, 5}, {3, 5, 5}});
  CHECK(top_members(specs::b_product()) ==
        std::vector<LevelMember>{{0, 1, 1}, {0, 5, 5}, {2, 5, 5}, {3, 5, 5}});

  CHECK(dominant_levels(specs::rogers_ramanujan(), 1)[0].value == doctest::Approx(std::sqrt(0.4)));
  CHECK(dominant_levels(specs::continued_fraction(), 1)[0].value ==
        doctest::Approx(2 * std::sqrt(6.0) / (5 * std::sqrt(5.0))));
  CHECK(dominant_levels(specs::b_product(), 1)[0].value == doctest::Approx(1 / std::sqrt(5.0)));
}

TEST_CASE("levels decrease and respect k = ell mod L") {
  for (const auto& s : {specs::rogers_ramanujan(), specs::continued_fraction(), specs::b_product()}) {
    const auto levels = dominant_levels(s, 6);
    REQUIRE(levels.size() == 6);
    for (std::size_t i = 0; i < levels.size(); ++i) {
      CHECK_FALSE(levels[i].members.empty());
      if (i > 0) CHECK(levels[i].value_squared < levels[i - 1].value_squared);
      for (const auto& m : levels[i].members) {
        CHECK((m.k - m.ell) % s.modulus_lcm() == 0);
        CHECK(delta_arc(s, m.kappa, m.ell) / Rational(m.k * m.k) == levels[i].value_squared);
      }
    }
  }
}

TEST_CASE("no major arcs") {
  const ProductSpec s({{5, 1, 1}, {5, 1, -1}});
  REQUIRE(classify_arcs(s).positive.empty());
  CHECK_THROWS_AS(dominant_levels(s, 1), HypothesisError);
}

TEST_CASE("leading profiles") {
  const auto a = leading_profile(specs::rogers_ramanujan());
  CHECK(a.modulus == 1);
  CHECK(a.signs == std::vector<ResidueSign>{ResidueSign::positive});
  CHECK(a.level_index == 0);

  const auto b = leading_profile(specs::continued_fraction());
  CHECK(b.modulus == 5);
  for (long r = 0; r < 5; ++r) {
    const double c = std::cos(4 * kPi / 5 * (r + 3.0 / 20));
    CHECK(b.signs[r] == (c > 0 ? ResidueSign::positive : ResidueSign::negative));
  }

  const auto t = leading_profile(specs::b_product());
  CHECK(t.modulus == 5);
  CHECK(t.signs == std::vector<ResidueSign>{ResidueSign::positive, ResidueSign::vanishing,
                                           ResidueSign::positive, ResidueSign::positive,
                                           ResidueSign::negative});
  CHECK_FALSE(t.inconclusive);
  for (long r = 0; r < 5; ++r) {
    const double closed = std::sin(kPi / 5) + std::sin(2 * kPi / 5 * (2 * r + 1));
    CHECK(t.amplitudes[r] / t.amplitudes[0] ==
          doctest::Approx(closed / (std::sin(kPi / 5) + std::sin(2 * kPi / 5))).epsilon(1e-12));
  }
}

TEST_CASE("amplitude times Bessel factor equals the restricted sum") {
  for (const auto& s : {specs::rogers_ramanujan(), specs::continued_fraction(), specs::b_product()}) {
    const auto level = dominant_levels(s, 1)[0];
    const auto& m0 = level.members[0];
    const Rational delta = delta_arc(s, m0.kappa, m0.ell);
    for (long n : {60, 123, 401}) {
      const auto amp = level_amplitude(s, level, n);
      const auto bf = bessel_factor<double>(omega_big(s), delta, m0.k, n);
      std::vector<LogComplex<double>> picked;
      for (const auto& term : asymptotic_terms<double>(s, n, 5)) {
        for (const auto& m : level.members) {
          if (m.kappa == term.kappa && m.ell == term.ell && m.k == term.k) picked.push_back(term.value);
        }
      }
      if (std::abs(amp) < 1e-9) {
        CHECK(picked.size() <= level.members.size());
        continue;
      }
      const auto sum = log_sum(std::span<const LogComplex<double>>(picked));
      const double re_expected = amp.real() * std::exp(bf.log_mag) * std::cos(bf.arg);
      CHECK(sum.real_sign() * std::exp(sum.log_abs_real()) / re_expected ==
            doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("amplitude is periodic") {
  for (const auto& s : {specs::rogers_ramanujan(), specs::continued_fraction(), specs::b_product()}) {
    const auto v = leading_profile(s);
    for (long n = 1; n <= 30; ++n) {
      const auto a = level_amplitude(s, v.level, n);
      const auto b = level_amplitude(s, v.level, n + v.modulus);
      CHECK(std::abs(a - b) < 1e-12 * (1 + std::abs(a)));
    }
  }
}

TEST_CASE("compare") {
  const auto rows = compare(specs::rogers_ramanujan(), {100, 200, 400});
  REQUIRE(rows.size() == 3);
  CHECK(std::abs(rows[1].rel_error) < std::abs(rows[0].rel_error));
  CHECK(std::abs(rows[2].rel_error) < std::abs(rows[1].rel_error));
  for (const auto& r : rows) {
    CHECK(r.sign_exact == 1);
    CHECK(r.sign_asym == 1);
    CHECK(r.imag_ratio < 1e-8);
  }
  const auto c = compare(specs::continued_fraction(), {300}, std::nullopt, Precision::extended);
  CHECK(c[0].sign_asym == c[0].sign_exact);
  CHECK(c[0].exact == expand_spec(specs::continued_fraction(), 300)[300]);
  CHECK(compare(specs::b_product(), {}).empty());
  CHECK_THROWS_AS(compare(specs::b_product(), expand_spec(specs::b_product(), 10), {11}),
                  std::out_of_range);
  const auto z = compare(specs::b_product(), {6});
  CHECK(z[0].sign_exact == 0);
  CHECK(std::isnan(z[0].rel_error));
}

TEST_CASE("sign checks") {
  const auto zero = sign_check(specs::b_product(), 5, 0, 1000);
  REQUIRE(zero.size() == 5);
  CHECK(zero[1].pattern == SignPattern::all_zero);
  CHECK(zero[1].count == 200);

  const auto t = sign_check(specs::b_product(), 5, 250, 5004);
  CHECK(t[0].pattern == SignPattern::all_positive);
  CHECK(t[2].pattern == SignPattern::all_positive);
  CHECK(t[3].pattern == SignPattern::all_positive);
  CHECK(t[4].pattern == SignPattern::all_negative);

  const auto c = sign_check(specs::continued_fraction(), 5, 250, 5004);
  CHECK(c[0].pattern == SignPattern::all_positive);
  CHECK(c[2].pattern == SignPattern::all_positive);
  for (long r : {1, 3, 4}) CHECK(c[r].pattern == SignPattern::all_negative);

  const auto mixed = sign_check(specs::continued_fraction(), 1, 0, 20);
  CHECK(mixed[0].pattern == SignPattern::mixed);
  REQUIRE(mixed[0].counterexample.has_value());
  CHECK(sgn(expand_spec(specs::continued_fraction(), 20)[*mixed[0].counterexample]) !=
        sgn(expand_spec(specs::continued_fraction(), 20)[0]));

  CHECK(sign_check(specs::b_product(), 7, 3, 4)[6].pattern == SignPattern::empty);
  CHECK_THROWS_AS(sign_check(expand_spec(specs::b_product(), 10), 5, 0, 11), std::out_of_range);
  CHECK(to_string(SignPattern::all_zero) == "all-zero");
  CHECK(to_string(ResidueSign::vanishing) == "vanishing");
}

}
