#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

// Lowest admissible height on the critical line.  Below ~7 the asymptotic
// expansion of the phase function theta(t) degrades and theta itself stops
// being monotone, so every operation in the library refuses heights below
// this cutoff.
inline constexpr double kMinHeight = 7.0;

// A height t on the critical line s = 1/2 + it, restricted to t >= 7.
struct CriticalHeight {
    double t;

    explicit CriticalHeight(double height) : t(height) {
        if (!(t >= kMinHeight))
            throw std::domain_error("CriticalHeight: t = " + std::to_string(height) +
                                    " is below the admissible cutoff t >= 7");
    }
};

// Numerical knobs shared across the library.
//
//   theta_correction_terms  number of asymptotic tail terms of theta(t)
//                           beyond the main term (0..3)
//   rs_correction_order     0 = Riemann-Siegel main sum only,
//                           1 = main sum plus the remainder correction series
//   quad_rel_tol/abs_tol    adaptive quadrature target accuracy
//   root_tol                bracketed root solves (Gram points, ladder)
struct PrecisionConfig {
    int theta_correction_terms = 3;
    int rs_correction_order = 1;
    double quad_rel_tol = 1e-8;
    double quad_abs_tol = 1e-10;
    double root_tol = 1e-9;

    void validate() const {
        if (theta_correction_terms < 0 || theta_correction_terms > 3)
            throw std::domain_error("PrecisionConfig: theta_correction_terms must be in 0..3");
        if (rs_correction_order < 0 || rs_correction_order > 1)
            throw std::domain_error("PrecisionConfig: rs_correction_order must be 0 or 1");
        if (!(quad_rel_tol > 0) || !(quad_abs_tol > 0) || !(root_tol > 0))
            throw std::domain_error("PrecisionConfig: tolerances must be strictly positive");
    }
};

}  // namespace zetalab
