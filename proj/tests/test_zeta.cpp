#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;

TEST_CASE("oracle sanity against frozen multiprecision values") {
    // mpmath, dps=30
    CHECK((double)oracle::oracle_z(50.0) == doctest::Approx(-0.34073500595502498).epsilon(1e-13));
    CHECK((double)oracle::oracle_z(100.0) == doctest::Approx(2.6926970566644635).epsilon(1e-13));
    CHECK((double)oracle::oracle_z(1000.0) == doctest::Approx(0.99779463752158661).epsilon(1e-13));
    CHECK((double)oracle::oracle_z(10000.0) == doctest::Approx(-0.34139472423120856).epsilon(1e-13));
    // Z is real: the imaginary part of e^{i theta} zeta must vanish
    for (double t : {50.0, 313.7, 9999.5}) {
        const auto zc = oracle::oracle_zeta_half(t);
        const long double th = oracle::oracle_theta(t);
        const long double im_part = sinl(th) * zc.re + cosl(th) * zc.im;
        const long double mag = fabsl(zc.re) + fabsl(zc.im) + 1.0L;
        CHECK((double)fabsl(im_part) <= (double)((1e-13L + 1e-17L * fabsl(th)) * mag));
    }
}

TEST_CASE("z_eval against the Euler-Maclaurin reference at fixed heights") {
    CHECK(z_eval(CriticalHeight(100.0)) == doctest::Approx(2.6926970566644635).epsilon(1e-7));
    CHECK(z_eval(CriticalHeight(1000.0)) == doctest::Approx(0.99779463752158661).epsilon(1e-8));
    CHECK(z_eval(CriticalHeight(10000.0)) == doctest::Approx(-0.34139472423120856).epsilon(1e-9));
    CHECK(zeta_abs_sq(CriticalHeight(1000.0)) ==
          doctest::Approx(0.99559413866683442).epsilon(1e-5));  // |zeta(1/2+1000i)|^2
}

TEST_CASE("z_eval vs oracle on random heights in [50, 1e4]") {
    std::mt19937_64 rng(0x5eed1234);
    std::uniform_real_distribution<double> dist(50.0, 1e4);
    double worst = 0.0;
    for (int i = 0; i < 25; ++i) {
        const double t = dist(rng);
        const double err = std::fabs((double)((long double)z_eval(CriticalHeight(t)) -
                                              oracle::oracle_z(t)));
        worst = std::max(worst, err);
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("remainder correction matters and improves") {
    PrecisionConfig bare;
    bare.rs_correction_order = 0;
    for (double t : {50.0, 100.0, 500.0, 5000.0}) {
        const long double want = oracle::oracle_z(t);
        const double err0 = std::fabs((double)((long double)z_eval(CriticalHeight(t), bare) - want));
        const double err1 = std::fabs((double)((long double)z_eval(CriticalHeight(t)) - want));
        CHECK(err1 < err0);
        CHECK(err1 <= 5e-7);
    }
}

TEST_CASE("first zero of Z near 14.1347251") {
    // sign change in [14.0, 14.3], bisected; the true ordinate is
    // 14.134725141734694 (frozen from the reference)
    double lo = 14.0, hi = 14.3;
    double z_lo = z_eval(CriticalHeight(lo));
    REQUIRE(z_lo * z_eval(CriticalHeight(hi)) < 0);
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double zm = z_eval(CriticalHeight(mid));
        if ((zm < 0) == (z_lo < 0)) { lo = mid; z_lo = zm; } else { hi = mid; }
    }
    const double root = 0.5 * (lo + hi);
    CHECK(root == doctest::Approx(14.134725141734694).epsilon(1e-6));
    CHECK(std::fabs(root - 14.1347251) <= 1e-5);
    CHECK(zeta_abs_sq(CriticalHeight(14.1347251)) <= 1e-10);
}

TEST_CASE("square identity is bitwise") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(7.0, 1e6);
    for (int i = 0; i < 50; ++i) {
        const double t = dist(rng);
        const double z = z_eval(CriticalHeight(t));
        CHECK(zeta_abs_sq(CriticalHeight(t)) == z * z);
        CHECK(zeta_abs_sq(CriticalHeight(t)) >= 0.0);
    }
}

TEST_CASE("domain and range guards") {
    CHECK_THROWS_AS(z_eval(CriticalHeight(6.99)), std::domain_error);
    CHECK_THROWS_AS(z_eval(CriticalHeight(2e9)), std::range_error);
    PrecisionConfig bad;
    bad.rs_correction_order = 7;
    CHECK_THROWS_AS(z_eval(CriticalHeight(100.0), bad), std::domain_error);
}
