#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "zetalab/theta.hpp"

using namespace zetalab;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
}

TEST_CASE("theta main term at the stationary point t = 2pi") {
    // ln(t/2pi) = 0 there, so the bare main term is -pi - pi/8
    CHECK(detail::theta_asymptotic(kTwoPi, 0) == doctest::Approx(-kPi - kPi / 8).epsilon(1e-15));
}

TEST_CASE("theta rejects heights below the cutoff") {
    CHECK_THROWS_AS(theta(CriticalHeight(6.9)), std::domain_error);
    CHECK_THROWS_AS(CriticalHeight(2.0), std::domain_error);
}

TEST_CASE("theta matches the log-gamma reference") {
    // reference values cross-checked against an independent multiprecision
    // implementation during development
    CHECK(oracle::oracle_theta(100.0) ==
          doctest::Approx(87.972165231787219625L).epsilon(1e-15));
    CHECK(oracle::oracle_theta(1000.0) ==
          doctest::Approx(2034.5464280380316087L).epsilon(1e-15));

    PrecisionConfig cfg;
    for (double t : {7.0, 9.5, 14.134725, 50.0, 100.0, 1000.0, 1e4, 1e5}) {
        const double got = theta(CriticalHeight(t), cfg);
        const long double want = oracle::oracle_theta(t);
        CHECK(std::fabs((long double)got - want) <= 1e-9L);
    }
}

TEST_CASE("correction terms improve the tail") {
    for (double t : {8.0, 12.0, 30.0}) {
        const long double want = oracle::oracle_theta(t);
        double prev = 1e9;
        for (int k = 0; k <= 3; ++k) {
            PrecisionConfig cfg;
            cfg.theta_correction_terms = k;
            const double err = std::fabs((double)(theta(CriticalHeight(t), cfg) - (double)want));
            CHECK(err < prev);
            prev = err;
        }
    }
}

TEST_CASE("first zero of theta sits at ~17.8455995") {
    // bisection root of the reference phase; frozen from the oracle
    long double lo = 17.0, hi = 18.5;
    for (int i = 0; i < 80; ++i) {
        const long double mid = 0.5L * (lo + hi);
        if (oracle::oracle_theta((double)mid) < 0) lo = mid; else hi = mid;
    }
    const double root = (double)(0.5L * (lo + hi));
    CHECK(root == doctest::Approx(17.8455995404).epsilon(1e-9));
    CHECK(std::fabs(theta(CriticalHeight(root))) <= 1e-8);
}

TEST_CASE("theta strictly increasing on the domain") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(7.0, 1e5);
    for (int i = 0; i < 200; ++i) {
        double t1 = dist(rng), t2 = dist(rng);
        if (t1 > t2) std::swap(t1, t2);
        if (t1 == t2) continue;
        CHECK(theta(CriticalHeight(t2)) > theta(CriticalHeight(t1)));
    }
}

TEST_CASE("finite-difference derivative matches (1/2) ln(t/2pi)") {
    for (double t : {100.0, 1e3, 1e4}) {
        const double h = 1e-3 * t;
        const double fd = (theta(CriticalHeight(t + h)) - theta(CriticalHeight(t - h))) / (2 * h);
        const double want = 0.5 * std::log(t / kTwoPi);
        CHECK(std::fabs(fd / want - 1.0) <= 1e-4);
        CHECK(theta_derivative(CriticalHeight(t)) == doctest::Approx(want).epsilon(1e-6));
    }
}
