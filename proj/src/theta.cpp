#include "zetalab/theta.hpp"

#include <cmath>

namespace zetalab {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
}  // namespace

namespace detail {

double theta_asymptotic(double t, int correction_terms) {
    const double half_t = 0.5 * t;
    double v = half_t * std::log(t / kTwoPi) - half_t - kPi / 8.0;
    const double inv_t = 1.0 / t;
    const double inv_t2 = inv_t * inv_t;
    if (correction_terms >= 1) v += inv_t / 48.0;
    if (correction_terms >= 2) v += 7.0 / 5760.0 * inv_t * inv_t2;
    if (correction_terms >= 3) v += 31.0 / 80640.0 * inv_t * inv_t2 * inv_t2;
    return v;
}

double theta_asymptotic_derivative(double t, int correction_terms) {
    double v = 0.5 * std::log(t / kTwoPi);
    const double inv_t2 = 1.0 / (t * t);
    if (correction_terms >= 1) v -= inv_t2 / 48.0;
    if (correction_terms >= 2) v -= 21.0 / 5760.0 * inv_t2 * inv_t2;
    if (correction_terms >= 3) v -= 155.0 / 80640.0 * inv_t2 * inv_t2 * inv_t2;
    return v;
}

}  // namespace detail

double theta(CriticalHeight t, const PrecisionConfig& cfg) {
    cfg.validate();
    return detail::theta_asymptotic(t.t, cfg.theta_correction_terms);
}

double theta_derivative(CriticalHeight t, const PrecisionConfig& cfg) {
    cfg.validate();
    return detail::theta_asymptotic_derivative(t.t, cfg.theta_correction_terms);
}

}  // namespace zetalab
