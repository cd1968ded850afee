#pragma once

#include <cstdint>
#include <vector>

#include "zetalab/precision.hpp"

namespace zetalab {

// An odd-order zero of Z located by a sign change: Z flips sign across
// [gamma - bracket_width, gamma + bracket_width].
struct ZeroOrdinate {
    double gamma;
    double bracket_width;
};

// Sign-change scan of Z over [a, b]: grid of step <= (2pi/ln(b/2pi))/8, each
// sign change bisected to cfg.root_tol.  Finds exactly the odd-order zeros;
// even-order zeros and pairs closer than one grid cell are missed (a
// documented limitation of sign-change scans).
std::vector<ZeroOrdinate> find_zeros(double a, double b, const PrecisionConfig& cfg = {});

// Number of sign-change zeros with 7 < gamma <= T (the first ordinate is
// above 14, so nothing is lost below the domain cutoff).
std::int64_t count_n0(double T, const PrecisionConfig& cfg = {});

// Consecutive zero gaps over [a, b] plus the classical comparison curves
// evaluated at the left endpoint of the maximal gap.  The scale constants in
// the literature bounds are unknown, so only gap/curve ratios are reported,
// never asserted.
struct GapReport {
    std::vector<double> ordinates;
    std::vector<double> gaps;
    double max_gap;
    double max_gap_left;              // gamma' of the maximal gap
    double curve_sixth_power;         // (gamma')^{1/6} ln^6 gamma'
    double curve_karatsuba;           // (gamma')^{5/32}
    double curve_ivic;                // (gamma')^{0.1559458}
    double curve_rh_conditional;      // 1 / lnln gamma'   (reference only)
    double ratio_sixth_power;
    double ratio_karatsuba;
    double ratio_ivic;
    double ratio_rh_conditional;
};

GapReport gap_report(double a, double b, const PrecisionConfig& cfg = {});

// True iff [T, T + T^{1/6} psi^2 ln^5 T] contains a sign-change zero.
// psi = 0 degenerates to an empty window (false).
bool interval_has_zero(double T, double psi_value, const PrecisionConfig& cfg = {});

// Zero-count increments over the classical short windows:
//   HL1921 / Selberg:  W = T^{1/2+eps}
//   Moser:             W = T^{5/12} psi ln^3 T
// The corresponding lower-bound reference expression is reported as the
// achieved ratio count/reference (the A-constants are free).
enum class CountVariant { HL1921, Selberg, Moser };

struct CountIncrease {
    double T;
    double window;
    std::int64_t count;
    double reference;   // W (HL1921), W ln T (Selberg), W (Moser)
    double achieved_ratio;
};

CountIncrease count_increase(double T, CountVariant variant, double param,
                             const PrecisionConfig& cfg = {});

}  // namespace zetalab
