#pragma once

#include <vector>

#include "zetalab/precision.hpp"

namespace zetalab {

// Frozen-phase oscillator bank approximating Z(t) near a base height x:
//
//   Z(t) ~ sum_{n <= tau(x)} (2/sqrt(n)) cos(t w_n(x) + psi(x)),
//   tau(x) = sqrt(x/2pi),  w_n(x) = ln(tau(x)/n),  psi(x) = -x/2 - pi/8,
//
// valid on the local window t in [x, x + x^{1/4}].  Each term linearizes the
// phase theta(t) - t ln n of the direct Riemann-Siegel sum at t = x, so the
// defect against z_eval is the frozen-phase drift plus the O(x^{-1/4})
// remainder.  Note the ratio inside w_n uses the real-valued tau(x); only
// the oscillator count is the integer floor.
struct SpectralDecomposition {
    double x;
    double v_max;        // x^{1/4}
    int truncation;      // floor(sqrt(x/2pi)), number of oscillators
    std::vector<double> amplitudes;   // 2/sqrt(n)
    std::vector<double> frequencies;  // ln(sqrt(x/2pi)/n), strictly decreasing, last >= 0
    double phase;        // psi(x) = -x/2 - pi/8
};

SpectralDecomposition spectral_decompose(CriticalHeight x);

// Oscillator-bank sum at t.  Throws std::range_error outside [x, x + v_max].
double spectral_eval(const SpectralDecomposition& d, double t);

}  // namespace zetalab
