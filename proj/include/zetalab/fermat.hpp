#pragma once

#include <cstdint>
#include <vector>

namespace zetalab {

// A Fermat rational (x^n + y^n) / z^n with positive integers and n >= 3.
// Equality tests against 1 are exact integer comparisons of x^n + y^n with
// z^n; the floating `value` is only for use as a functional parameter.
struct FermatRational {
    std::int64_t x, y, z;
    int n;
    double value;
};

// Builds the rational and its exact numerator/denominator; throws
// std::overflow_error when x^n + y^n or z^n leaves the 128-bit range.
FermatRational fermat_value(std::int64_t x, std::int64_t y, std::int64_t z, int n);

// Exact test (x^n + y^n) == z^n.
bool fermat_equals_one(const FermatRational& fr);

// |1/FR - 1| computed from the exact integers: |z^n - x^n - y^n| / (x^n + y^n).
// Zero exactly when FR = 1.
double fermat_unit_gap(const FermatRational& fr);

// Exhaustive scan of all tuples x, y, z in [1, bound], n in [n_min, n_max].
struct FermatScanResult {
    std::int64_t tuples_checked;
    std::int64_t unit_hits;  // number of tuples with FR == 1 (Fermat-Wiles: 0)
};

FermatScanResult fermat_scan(std::int64_t bound, int n_min, int n_max);

// The same enumeration, materialized.
std::vector<FermatRational> enumerate_fermat_rationals(std::int64_t bound, int n_min, int n_max);

}  // namespace zetalab
