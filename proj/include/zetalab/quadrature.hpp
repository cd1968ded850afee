#pragma once

#include <cstdint>
#include <functional>

#include "zetalab/precision.hpp"

namespace zetalab {

// Euler-Mascheroni constant; appears in the smoothed second-moment model and
// throughout the ladder construction.
inline constexpr double kEulerGamma = 0.57721566490153286061;

struct QuadratureResult {
    double value = 0.0;
    double err_estimate = 0.0;
    std::int64_t evaluations = 0;
};

// Backend selector for the integral-heavy operations: `quadrature` evaluates
// the true oscillatory |zeta|^2, `main_term` substitutes its smoothed local
// mean d/dT [T ln(T/2pi) - (1-2c)T] = ln(T/2pi) + 2c.  The smoothed mode is
// only legal where a caller explicitly allows it (trend studies beyond the
// direct-evaluation range); every report labels which one produced it.
enum class IntegralBackend { quadrature, main_term };

const char* backend_name(IntegralBackend b);

// Adaptive composite Gauss-Legendre (order 8) quadrature of f over [a, b].
// Panels start at `panel_width(t)` wide (clamped to the interval), each panel
// is accepted when one GL8 sweep and its two-half refinement agree within the
// panel's share of the total budget, and disagreeing panels are bisected.
// Throws tolerance_error (carrying the best value) if a panel cannot reach
// its budget within the depth limit.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const PrecisionConfig& cfg,
                           const std::function<double(double)>& panel_width);

// Same, with a uniform initial panel width of (b-a)/16.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const PrecisionConfig& cfg = {});

// Hardy-Littlewood second-moment increment J(b) - J(a) = int_a^b |zeta(1/2+it)|^2 dt,
// evaluated by adaptive quadrature of Z(t)^2 with panels tied to the local
// oscillation scale 2pi/ln(t/2pi).  Requires 7 <= a <= b.
QuadratureResult j_between(double a, double b, const PrecisionConfig& cfg = {});

// Smoothed model of the same integral:  J(T) ~ T ln(T/2pi) - (1-2c) T with c
// the Euler constant.  The coefficient is validated against j_between on
// [1e3, 1e5] by the test suite before anything trusts the fast backend.
double j_main_term(double T);

// d/dT j_main_term = ln(T/2pi) + 2c: the smoothed local mean of |zeta(1/2+it)|^2.
double j_main_term_density(double T);

// j_main_term(b) - j_main_term(a) in cancellation-free form
//   (b-a) ln(a/2pi) + b log1p((b-a)/a) - (1-2c)(b-a),
// exact to machine precision of the increment itself even when a, b are huge.
double j_main_increment(double a, double b);

// Backend-dispatched increment J(b) - J(a).
QuadratureResult j_increment(double a, double b, IntegralBackend backend,
                             const PrecisionConfig& cfg = {});

}  // namespace zetalab
