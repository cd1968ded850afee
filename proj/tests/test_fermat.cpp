#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "zetalab/fermat.hpp"

using namespace zetalab;

TEST_CASE("simple values") {
    CHECK(fermat_value(1, 1, 1, 3).value == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(fermat_value(2, 2, 2, 3).value == doctest::Approx(2.0).epsilon(1e-15));  // (8+8)/8
    CHECK(fermat_value(3, 4, 5, 3).value == doctest::Approx((27.0 + 64.0) / 125.0).epsilon(1e-15));
    CHECK(fermat_value(1, 1, 2, 3).value == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(fermat_value(1, 1, 1, 3).value > 0.0);
}

TEST_CASE("exact unit tests are integer comparisons") {
    CHECK_FALSE(fermat_equals_one(fermat_value(3, 4, 5, 3)));  // 91/125
    CHECK_FALSE(fermat_equals_one(fermat_value(6, 8, 9, 3)));  // 728/729, close but not 1
    CHECK(fermat_unit_gap(fermat_value(6, 8, 9, 3)) ==
          doctest::Approx(1.0 / 728.0).epsilon(1e-12));
    CHECK(fermat_unit_gap(fermat_value(1, 1, 1, 3)) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("desk-scale shadow of Fermat-Wiles: no unit in the full box") {
    const auto res = fermat_scan(50, 3, 7);
    CHECK(res.tuples_checked == 5LL * 50 * 50 * 50);
    CHECK(res.unit_hits == 0);
}

TEST_CASE("validation and overflow") {
    CHECK_THROWS_AS(fermat_value(0, 1, 1, 3), std::domain_error);
    CHECK_THROWS_AS(fermat_value(1, 1, 1, 2), std::domain_error);
    CHECK_THROWS_AS(fermat_value(1000000, 1, 1, 7), std::overflow_error);
}

TEST_CASE("enumeration size and determinism") {
    const auto list = enumerate_fermat_rationals(3, 3, 4);
    CHECK(list.size() == 2u * 27u);
    CHECK(list.front().n == 3);
    CHECK(list.back().n == 4);
    const auto list2 = enumerate_fermat_rationals(3, 3, 4);
    for (std::size_t i = 0; i < list.size(); ++i) {
        CHECK(list[i].x == list2[i].x);
        CHECK(list[i].value == list2[i].value);
    }
}
