#pragma once

#include <vector>

#include "zetalab/precision.hpp"
#include "zetalab/quadrature.hpp"

namespace zetalab {

// Configuration for the slow companion function phi1 and everything built on
// it.  The constant c is Euler-Mascheroni; the whole construction assumes
// (1-c) ~ 0.4228 and refuses configurations outside that band.
struct LadderConfig {
    double c = kEulerGamma;
    IntegralBackend backend = IntegralBackend::quadrature;
    double root_tol = 1e-9;
    PrecisionConfig precision{};

    void validate() const;
};

// phi1 is defined here by its exact-increment equation on the
// second-moment integral J(T) = int_0^T |zeta(1/2+it)|^2 dt:
//
//   J(T) - J(phi1(T)) = (1-c) * phi1(T)
//
// equivalently phi1^{-1}(T) = y is the unique y > T with J(y) - J(T) = (1-c)T.
// This reproduces the lag T - phi1(T) ~ (1-c) T / ln T and makes the
// per-step increment int_{T}^{phi1^{-1}(T)} Z^2 = (1-c)T exact by
// construction.  Both directions are monotone bracketed root solves; the
// defining function of the downward solve has slope <= -(1-c), so it is
// never ill-conditioned.
double phi1(double T, const LadderConfig& cfg = {});
double phi1_inverse(double T, const LadderConfig& cfg = {});

// Tower of reverse iterates T = heights[0] < heights[1] < ... < heights[k],
// heights[r] = phi1^{-1}(heights[r-1]).
struct ReverseIterates {
    double T;
    int k;
    std::vector<double> heights;
};

ReverseIterates reverse_iterates(double T, int k, const LadderConfig& cfg = {});

// r-fold application of phi1; r = 0 returns t unchanged.  Throws
// std::domain_error if an iterate falls below the phi1 domain.
double forward_iterate(double t, int r, const LadderConfig& cfg = {});

// Partition of [T, heights[k]] into the k ladder segments: lengths, their
// consecutive ratios, per-segment integrals of Z^2, their ratios, and the
// independently integrated whole for the additivity check.
struct PartitionReport {
    ReverseIterates iterates;
    std::vector<double> segment_lengths;
    std::vector<double> length_ratios;
    std::vector<double> segment_integrals;
    std::vector<double> segment_integral_errs;
    std::vector<double> integral_ratios;
    double segments_total;
    double whole_integral;
    double whole_err;
};

PartitionReport partition_report(double T, int k, const LadderConfig& cfg = {});

// Iterated product integral
//
//   int_{[T]^k}^{[T+2l]^k}  prod_{r=0}^{k-1} |zeta(1/2 + i phi1^r(t))|^2 dt,
//   [G]^k = phi1^{-k}(G),
//
// expected ~ 2l ln^k T.  The forward iterates phi1^r(t) are evaluated from
// per-panel Chebyshev interpolants (degree <= 12) whose nodes are solved by
// continuation from the endpoint towers; each panel's interpolation error is
// checked at the panel midpoint against a direct solve and the panel is
// bisected if the check exceeds 10 * root_tol.
QuadratureResult product_integral(double T, double l, int k, const LadderConfig& cfg = {});

}  // namespace zetalab
