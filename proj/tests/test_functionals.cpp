#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "zetalab/functionals.hpp"

using namespace zetalab;

namespace {
constexpr double kPi = 3.14159265358979323846;

LadderConfig main_cfg() {
    LadderConfig cfg;
    cfg.backend = IntegralBackend::main_term;
    return cfg;
}
}

TEST_CASE("lemma2 prediction formula") {
    // T = (4 pi l)^6 makes the predicted ratio exactly 1
    const double l = 1.0;
    const double T = std::pow(4.0 * kPi * l, 6.0);
    const auto r = lemma2_ratio(T, l, main_cfg());
    CHECK(r.predicted == doctest::Approx(1.0).epsilon(1e-12));

    // doubling l halves the prediction exactly
    const auto r2 = lemma2_ratio(T, 2.0 * l, main_cfg());
    CHECK(r2.predicted == doctest::Approx(0.5 * r.predicted).epsilon(1e-14));
}

TEST_CASE("theorem1 is the lemma2 ratio rescaled (same code path)") {
    const double alpha = 1.0, l = 1.0, tau = 2.0;
    const double T = std::pow(4.0 * kPi * alpha * tau, 6.0);
    const auto cfg = main_cfg();
    const auto est = theorem1_estimate(alpha, l, tau, cfg);
    const auto raw = lemma2_ratio(T, l, cfg);
    CHECK(est.value == raw.lhs_ratio / tau);
    CHECK(est.target == alpha / l);

    // target scaling laws need no zeta machinery at all
    CHECK(theorem1_estimate(2.0, 4.0, tau, cfg).target == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(theorem1_estimate(2.0 * alpha, l, tau, cfg).target == 2.0 * est.target);
    CHECK(theorem1_estimate(alpha, 2.0 * l, tau, cfg).target == 0.5 * est.target);
}

TEST_CASE("prop1 substitutes the Fermat rational for l") {
    const auto cfg = main_cfg();
    const auto fr = fermat_value(1, 1, 1, 3);  // value 2
    const auto via_fr = prop1_estimate(2.0, fr, 2.0, cfg);
    CHECK(via_fr.target == doctest::Approx(1.0).epsilon(1e-15));  // 2/2
    const auto direct = theorem1_estimate(2.0, fr.value, 2.0, cfg);
    CHECK(via_fr.value == direct.value);
    CHECK(via_fr.target == direct.target);
}

TEST_CASE("quadrature-mode consistency at a desk height") {
    // small tau so T = (4 pi alpha tau)^6 ~ 1e4 stays cheap
    LadderConfig cfg;  // quadrature
    const double alpha = 1.0, l = 1.0;
    const double tau = std::pow(1.2e4, 1.0 / 6.0) / (4.0 * kPi * alpha);
    const auto est = theorem1_estimate(alpha, l, tau, cfg);
    const auto raw = lemma2_ratio(std::pow(4.0 * kPi * alpha * tau, 6.0), l, cfg);
    CHECK(est.value == raw.lhs_ratio / tau);
    CHECK(est.value > 0.0);
}

TEST_CASE("zeta condition scan") {
    const auto cfg = main_cfg();
    const double alpha = std::sqrt(2.0);
    const auto records = zeta_condition_gap(alpha, 5, 3, 2.0, cfg);
    REQUIRE(records.size() == 125);
    double min_gap = 1e300;
    for (const auto& rec : records) {
        CHECK(rec.exact_gap_positive);
        CHECK(rec.exact_target_gap > 0.0);
        CHECK(rec.numeric_gap >= 0.0);
        min_gap = std::min(min_gap, rec.exact_target_gap);
    }
    CHECK(min_gap > 0.0);

    // alpha equal to an enumerated value: the exact gap is zero iff FR = 1,
    // hence positive
    const auto at_two = zeta_condition_gap(2.0, 2, 3, 2.0, cfg);
    for (const auto& rec : at_two) CHECK(rec.exact_target_gap > 0.0);

    CHECK(zeta_condition_gap(alpha, 0, 3, 2.0, cfg).empty());
    CHECK_THROWS_AS(zeta_condition_gap(alpha, 100, 3, 2.0, cfg), std::domain_error);
}

TEST_CASE("lemma3 internal identity in the smoothed world") {
    // with the construction-exact ladder, J(phi1^{-1}(tau)) - J(tau) = (1-c) tau,
    // which reduces the factored form to the lemma2 chain
    const auto cfg = main_cfg();
    const auto chk = lemma3_check(12.0, 1.0, cfg);
    CHECK(std::fabs(chk.short_integral - (1.0 - cfg.c) * 12.0) <=
          1e-8 * (1.0 - cfg.c) * 12.0 + 1e-7);
    const double reduced = chk.product * 12.0 / (4.0 * kPi * chk.l);
    CHECK(chk.rhs ==
          doctest::Approx(reduced * chk.short_integral / ((1.0 - cfg.c) * 12.0)).epsilon(1e-12));
    CHECK(chk.ratio > 0.0);
}

TEST_CASE("theorem3 equilibrium constant") {
    const auto cfg = main_cfg();
    const auto eq = theorem3_equilibrium(10.0, cfg);
    CHECK(eq.l == doctest::Approx(0.18822237471833943).epsilon(1e-10));
    CHECK(2.0 * eq.l == doctest::Approx(1.0 / (2.0 * kPi * (1.0 - cfg.c))).epsilon(1e-14));
    CHECK(eq.ratio > 0.0);
}

TEST_CASE("range guards") {
    LadderConfig quad;  // quadrature caps near 1e8
    CHECK_THROWS_AS(theorem1_estimate(1.0, 1.0, 50.0, quad), std::range_error);
    CHECK_THROWS_AS(lemma2_ratio(500.0, 1.0, quad), std::domain_error);
    CHECK_THROWS_AS(lemma2_ratio(1e4, -1.0, quad), std::domain_error);
    CHECK_THROWS_AS(theorem1_estimate(-1.0, 1.0, 2.0, quad), std::domain_error);
    // far beyond even the smoothed model's range
    CHECK_THROWS_AS(theorem1_estimate(1.0, 1.0, 1e4, main_cfg()), std::range_error);
}
