#pragma once

#include "zetalab/precision.hpp"

namespace zetalab {

// Hard ceiling for direct Z(t) evaluation: the shared ln(n) / 2/sqrt(n)
// tables cover main sums of up to 16384 terms, i.e. t up to 2*pi*16384^2.
inline constexpr double kMaxDirectHeight = 1.6e9;

// Riemann-Siegel evaluation of the real function Z(t) = e^{i theta} zeta(1/2+it):
//
//   Z(t) ~ sum_{n <= sqrt(t/2pi)} (2/sqrt(n)) cos(theta(t) - t ln n) + R(t)
//
// With cfg.rs_correction_order = 0 only the main sum is returned.  With
// order 1 the remainder R is added: the standard correction series
//
//   R(t) = (-1)^{N-1} (t/2pi)^{-1/4} sum_{k=0..4} C_k(p) (t/2pi)^{-k/2},
//   N = floor(sqrt(t/2pi)),  p = frac(sqrt(t/2pi)),
//   C_0(p) = cos(2pi(p^2 - p - 1/16)) / cos(2pi p),
//
// where C_1..C_4 are the classical higher correction functions (evaluated
// here from precomputed Chebyshev tables).  The corrected form agrees with a
// quad-precision Euler-Maclaurin reference to ~2.6e-7 at t = 50 and to
// better than 1e-9 for t >= 300; the bare C_0 term alone is three orders of
// magnitude worse, which is not enough for desk-scale work.
double z_eval(CriticalHeight t, const PrecisionConfig& cfg = {});

// |zeta(1/2+it)|^2 = Z(t)^2.  Squares the z_eval result, so the identity
// zeta_abs_sq(t) == z_eval(t)^2 holds bitwise.
double zeta_abs_sq(CriticalHeight t, const PrecisionConfig& cfg = {});

namespace detail {

// Main-sum kernel: sum_{n=1..count} inv_sqrt_n[n-1] * cos(theta_t - t*ln_n[n-1]).
// Phases are reduced to [-pi, pi] before the cosine so the vector math
// library stays on its fast path; at heights ~1e9 the reduction noise is
// O(|phase| * eps) ~ 1e-6 rad per term, far below the accumulated value of
// the sums and integrals built on top.
double rs_main_sum(double t, double theta_t, const double* ln_n,
                   const double* inv_sqrt_n, int count);

// Shared tables ln(n), 2/sqrt(n) for n = 1..kTableSize (built once, immutable).
inline constexpr int kTableSize = 16384;
const double* ln_table();
const double* inv_sqrt_table();

// Remainder series C_0..C_4 evaluated at p in [0,1].
double rs_remainder(double a, int terms_in_main_sum);
double rs_correction_c(int k, double p);

}  // namespace detail

}  // namespace zetalab
