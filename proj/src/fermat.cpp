#include "zetalab/fermat.hpp"

#include <numeric>
#include <stdexcept>

namespace zetalab {

namespace {

using u128 = unsigned __int128;

u128 pow_checked(std::int64_t base, int n) {
    u128 acc = 1;
    const u128 b = static_cast<u128>(base);
    for (int i = 0; i < n; ++i) {
        const u128 next = acc * b;
        if (b != 0 && next / b != acc)
            throw std::overflow_error("fermat: power exceeds 128-bit range");
        acc = next;
    }
    return acc;
}

u128 add_checked(u128 a, u128 b) {
    const u128 s = a + b;
    if (s < a) throw std::overflow_error("fermat: sum exceeds 128-bit range");
    return s;
}

struct ExactParts {
    u128 num;  // x^n + y^n
    u128 den;  // z^n
};

ExactParts exact_parts(const FermatRational& fr) {
    return {add_checked(pow_checked(fr.x, fr.n), pow_checked(fr.y, fr.n)),
            pow_checked(fr.z, fr.n)};
}

void validate(std::int64_t x, std::int64_t y, std::int64_t z, int n) {
    if (x < 1 || y < 1 || z < 1)
        throw std::domain_error("fermat: x, y, z must be positive integers");
    if (n < 3) throw std::domain_error("fermat: n must be >= 3");
}

}  // namespace

FermatRational fermat_value(std::int64_t x, std::int64_t y, std::int64_t z, int n) {
    validate(x, y, z, n);
    FermatRational fr{x, y, z, n, 0.0};
    const ExactParts p = exact_parts(fr);
    fr.value = static_cast<double>(static_cast<long double>(p.num) /
                                   static_cast<long double>(p.den));
    return fr;
}

bool fermat_equals_one(const FermatRational& fr) {
    const ExactParts p = exact_parts(fr);
    return p.num == p.den;
}

double fermat_unit_gap(const FermatRational& fr) {
    const ExactParts p = exact_parts(fr);
    const u128 diff = p.num > p.den ? p.num - p.den : p.den - p.num;
    return static_cast<double>(static_cast<long double>(diff) /
                               static_cast<long double>(p.num));
}

FermatScanResult fermat_scan(std::int64_t bound, int n_min, int n_max) {
    FermatScanResult res{0, 0};
    for (int n = n_min; n <= n_max; ++n)
        for (std::int64_t x = 1; x <= bound; ++x) {
            const u128 xn = pow_checked(x, n);
            for (std::int64_t y = 1; y <= bound; ++y) {
                const u128 s = add_checked(xn, pow_checked(y, n));
                for (std::int64_t z = 1; z <= bound; ++z) {
                    ++res.tuples_checked;
                    if (s == pow_checked(z, n)) ++res.unit_hits;
                }
            }
        }
    return res;
}

std::vector<FermatRational> enumerate_fermat_rationals(std::int64_t bound, int n_min, int n_max) {
    std::vector<FermatRational> out;
    for (int n = n_min; n <= n_max; ++n)
        for (std::int64_t x = 1; x <= bound; ++x)
            for (std::int64_t y = 1; y <= bound; ++y)
                for (std::int64_t z = 1; z <= bound; ++z)
                    out.push_back(fermat_value(x, y, z, n));
    return out;
}

}  // namespace zetalab
