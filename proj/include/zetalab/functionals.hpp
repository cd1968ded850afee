#pragma once

#include <vector>

#include "zetalab/fermat.hpp"
#include "zetalab/ladder.hpp"

namespace zetalab {

// Finite-tau sample of one of the limit functionals, with the analytic
// target it should approach.
struct FunctionalEstimate {
    double tau;
    double alpha;
    double l;
    double value;
    double target;
    double rel_gap;  // |value - target| / |target|
};

// Ratio of the even-Gram-point window sum at T to the 7-fold iterated
// product integral, against its predicted value T^{1/6} / (4 pi l).
//
// cfg.backend selects how the discrete sums (and lemma3/theorem3's short
// second-moment factor) are computed.  The product-integral normalization
// itself always runs on the smoothed ladder: along the exact-increment map
// the iterated integral concentrates on the peaks of Z^2 and grows like
// ln T (3 ln^2 T / 2 pi^2)^{k-1} instead of ln^k T, which would swamp every
// finite-height trend these functionals exist to exhibit.
struct Lemma2Ratio {
    double T;
    double l;
    double sum;                // even Gram sum over the kind-H window at T
    QuadratureResult integral; // product_integral(T, l, 7)
    double lhs_ratio;          // sum / integral
    double predicted;          // T^{1/6} / (4 pi l)
    double rel_gap;
};

Lemma2Ratio lemma2_ratio(double T, double l, const LadderConfig& cfg = {});

// Scaled sample of the limit functional: value = lemma2 ratio at
// T = (4 pi alpha tau)^6 divided by tau; target = alpha / l.  Shares the
// lemma2_ratio code path bit for bit.
FunctionalEstimate theorem1_estimate(double alpha, double l, double tau,
                                     const LadderConfig& cfg = {});

// theorem1 with l replaced by a Fermat rational; target alpha / FR.
FunctionalEstimate prop1_estimate(double alpha, const FermatRational& fr, double tau,
                                  const LadderConfig& cfg = {});

// One row of the Fermat-Wiles zeta-condition scan: the finite-tau numerical
// gap |estimate - alpha| next to the analytically exact gap
// |alpha/FR - alpha| = |alpha| |z^n - x^n - y^n| / (x^n + y^n).  Only the
// exact gap carries the theorem-level content: it is positive exactly when
// FR != 1, which the exact integer comparison decides.
struct ZetaConditionRecord {
    FermatRational fr;
    bool exact_gap_positive;
    double exact_target_gap;
    double estimate;
    double numeric_gap;
};

std::vector<ZetaConditionRecord> zeta_condition_gap(double alpha, std::int64_t bound,
                                                    int n_max, double tau,
                                                    const LadderConfig& cfg = {});

// Gram-window sum at T = tau^6 against the factored form
// (1/(4 pi (1-c) l)) * [J increment over one ladder step at tau] * [product integral].
struct Lemma3Check {
    double tau;
    double l;
    double lhs;
    double short_integral;    // J(phi1^{-1}(tau)) - J(tau)
    double product;           // product_integral(tau^6, l, 7)
    double rhs;
    double ratio;             // lhs / rhs
};

Lemma3Check lemma3_check(double tau, double l, const LadderConfig& cfg = {});

// The equilibrium choice 2l = 1/(2 pi (1-c)) balances the two integrals
// against the Gram sum: ratio -> 1.
struct Theorem3Equilibrium {
    double tau;
    double l;
    double gram_sum;
    double short_integral;
    double product;
    double ratio;  // gram_sum / (short_integral * product)
};

Theorem3Equilibrium theorem3_equilibrium(double tau, const LadderConfig& cfg = {});

}  // namespace zetalab
