#include "zetalab/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace zetalab {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
}  // namespace

SpectralDecomposition spectral_decompose(CriticalHeight x) {
    SpectralDecomposition d;
    d.x = x.t;
    d.v_max = std::pow(x.t, 0.25);
    const double tau = std::sqrt(x.t / kTwoPi);
    d.truncation = static_cast<int>(tau);
    d.amplitudes.reserve(d.truncation);
    d.frequencies.reserve(d.truncation);
    for (int n = 1; n <= d.truncation; ++n) {
        d.amplitudes.push_back(2.0 / std::sqrt(static_cast<double>(n)));
        d.frequencies.push_back(std::log(tau / n));
    }
    d.phase = -0.5 * x.t - kPi / 8.0;
    return d;
}

double spectral_eval(const SpectralDecomposition& d, double t) {
    if (t < d.x || t > d.x + d.v_max)
        throw std::range_error("spectral_eval: t outside the local window [x, x + x^{1/4}]");
    double acc = 0.0;
    for (int i = 0; i < d.truncation; ++i)
        acc += d.amplitudes[i] * std::cos(t * d.frequencies[i] + d.phase);
    return acc;
}

}  // namespace zetalab
