#pragma once

#include "zetalab/precision.hpp"

namespace zetalab {

// Riemann-Siegel phase function theta(t): the rotation making
// Z(t) = e^{i theta(t)} zeta(1/2 + it) real-valued.  Evaluated through the
// asymptotic expansion
//
//   theta(t) = (t/2) ln(t/2pi) - t/2 - pi/8
//              + 1/(48 t) + 7/(5760 t^3) + 31/(80640 t^5) + ...
//
// with cfg.theta_correction_terms tail terms (0..3).  With all three tail
// terms the absolute error is ~5e-10 at t = 7 and below 1e-17 for t >= 100.
// Strictly increasing on t >= 7 (its stationary point is at t = 2pi).
double theta(CriticalHeight t, const PrecisionConfig& cfg = {});

// d theta / dt for the same truncation; main term (1/2) ln(t/2pi).
double theta_derivative(CriticalHeight t, const PrecisionConfig& cfg = {});

namespace detail {

// Ungated evaluation of the asymptotic formula itself (no t >= 7 check).
// Exposed for tests that exercise the expansion at the stationary point.
double theta_asymptotic(double t, int correction_terms);
double theta_asymptotic_derivative(double t, int correction_terms);

}  // namespace detail

}  // namespace zetalab
