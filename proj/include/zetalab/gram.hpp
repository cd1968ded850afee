#pragma once

#include <cstdint>
#include <vector>

#include "zetalab/precision.hpp"
#include "zetalab/quadrature.hpp"

namespace zetalab {

// Gram point: the height t_nu solving theta(t_nu) = pi * nu.
struct GramPoint {
    std::int64_t nu;
    double t;
};

// Solves theta(t) = pi*nu by bracket-guarded Newton iteration.  The residual
// |theta(t) - pi nu| is driven below max(cfg.root_tol, a few ulps of pi*nu);
// failure to converge throws convergence_error (never silent).
GramPoint gram_point(std::int64_t nu, const PrecisionConfig& cfg = {});

// All Gram points with a <= t_nu <= b (nu >= 1), ascending.
std::vector<GramPoint> gram_points_in(double a, double b, const PrecisionConfig& cfg = {});

// Summation windows [T, T+H] for the discrete Gram sums.
//
//   H1:  H = T^{3/4} * psi * sqrt(ln T)
//   H2:  H = T^{1/6} * psi * ln^5 T
//   H :  H = T^{1/6} * ln^6 T          (H2 with psi = sqrt(ln T))
//
// The classical admissibility bound for H2 is 0 < psi < (1/6) ln T / lnln T,
// which only exceeds sqrt(ln T) at astronomically large T; since the
// canonical choice psi = sqrt(ln T) must stay usable at desk heights, the
// constructor accepts psi up to max of the two bounds.
enum class WindowKind { H1, H2, H };

struct SumWindow {
    double T;
    double H;
    WindowKind kind;
    double psi_value;  // meaningful for H1/H2 only; 0 for kind H
};

SumWindow make_window(double T, WindowKind kind, double psi_value = 0.0);

// Discrete sums over the even/odd Gram points in the window:
//
//   sum_even = sum of Z(t_{2nu}),   t_{2nu} in [T, T+H]
//   sum_odd  = sum of -Z(t_{2nu+1}) over odd-index points (the rewritten
//              form: both sums estimate (1/2pi) H ln(T/2pi) with + sign)
//
// Direct mode enumerates the points and evaluates Z; main-term mode replaces
// the sum by 2 * (smoothed count) = (theta(T+H) - theta(T)) / pi, the local
// mean of Z over an index class being 2.
double sum_even(const SumWindow& w, const PrecisionConfig& cfg = {},
                IntegralBackend backend = IntegralBackend::quadrature);
double sum_odd(const SumWindow& w, const PrecisionConfig& cfg = {},
               IntegralBackend backend = IntegralBackend::quadrature);

// Even-index Gram sum over the kind-H window at T against its predicted main
// term (1/2pi) T^{1/6} ln^7 T.
struct Lemma1Estimate {
    double sum;
    double main_term;
    double rel_dev;  // sum/main_term - 1
};

Lemma1Estimate lemma1_estimate(double T, const PrecisionConfig& cfg = {},
                               IntegralBackend backend = IntegralBackend::quadrature);

// Titchmarsh pair sum  S = sum_{nu=M+1}^{N} Z^2(t_nu) Z^2(t_{nu+1}).
double titchmarsh_pair_sum(std::int64_t M, std::int64_t N, const PrecisionConfig& cfg = {});

namespace detail {

// Smallest/largest Gram indices nu with t_nu inside [a, b] (nu >= 1).
// first > last means the window is empty.
struct GramIndexRange {
    std::int64_t first;
    std::int64_t last;
};
GramIndexRange gram_index_range(double a, double b, const PrecisionConfig& cfg);

// Sum of f over Gram points nu = first..last with stride `step` (1 or 2),
// enumerated by a warm-started Newton walker and accumulated with
// compensated partitioned reduction.  f receives (nu, t_nu).
double gram_walk_sum(std::int64_t first, std::int64_t last, std::int64_t step,
                     const PrecisionConfig& cfg,
                     double (*term)(std::int64_t nu, double t, const PrecisionConfig& cfg));

}  // namespace detail

}  // namespace zetalab
