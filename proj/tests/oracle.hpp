#pragma once

// Quad-precision reference implementations, independent of the library code
// paths they certify:
//
//   oracle_theta  - exact phase via complex log-gamma (shifted Stirling),
//                   not the asymptotic expansion used by the library
//   oracle_zeta   - zeta(1/2 + it) by Euler-Maclaurin summation
//   oracle_z      - Z(t) = Re{ e^{i theta} zeta(1/2+it) }
//
// Everything runs in __float128; absolute errors are far below 1e-20 on the
// heights the tests use, leaving orders of magnitude of margin over every
// tolerance asserted against these references.

namespace zetalab::oracle {

long double oracle_theta(double t);

struct Complex {
    long double re;
    long double im;
};

Complex oracle_zeta_half(double t);

long double oracle_z(double t);

// Newton solve of oracle_theta(t) = pi * nu.
long double oracle_gram_height(long long nu);

}  // namespace zetalab::oracle
