#include "zetalab/gram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zetalab/errors.hpp"
#include "zetalab/parallel.hpp"
#include "zetalab/theta.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

double theta_at(double t, const PrecisionConfig& cfg) {
    return detail::theta_asymptotic(t, cfg.theta_correction_terms);
}

double theta_deriv_at(double t, const PrecisionConfig& cfg) {
    return detail::theta_asymptotic_derivative(t, cfg.theta_correction_terms);
}

// theta residual below which double precision cannot improve: a few ulps of
// the target value.  Gram certification at nu <= 1e5 stays under 1e-9; at
// much greater heights the attainable floor grows with |pi*nu| and the
// solver must not pretend otherwise.
double attainable_tol(double target, double root_tol) {
    return std::max(root_tol, std::fabs(target) * 4.5e-16);
}

// Bracket-guarded Newton for theta(t) = target, t >= 7.
double solve_theta_equals(double target, double guess, const PrecisionConfig& cfg) {
    double lo = kMinHeight, hi = std::max(guess * 2.0, 32.0);
    while (theta_at(hi, cfg) < target) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e18)
            throw convergence_error("gram: bracket expansion ran away", lo, hi);
    }

    const double tol = attainable_tol(target, cfg.root_tol);
    double t = std::clamp(guess, lo, hi);
    double resid = theta_at(t, cfg) - target;
    for (int it = 0; it < 64; ++it) {
        if (std::fabs(resid) <= tol) return t;
        if (resid > 0) hi = t; else lo = t;
        double step = resid / theta_deriv_at(t, cfg);
        double next = t - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        t = next;
        resid = theta_at(t, cfg) - target;
    }
    if (std::fabs(resid) <= tol) return t;
    throw convergence_error("gram: Newton failed to reach tolerance", lo, hi);
}

// Initial guess from inverting the theta main term: with u = t/2pi,
// theta ~ pi(u (ln u - 1) - 1/8).
double invert_theta_main(double target) {
    const double g = target / kPi + 0.125;
    double u = std::max(2.0, g);
    for (int i = 0; i < 32; ++i) {
        const double lnu = std::log(u);
        const double f = u * (lnu - 1.0) - g;
        const double df = lnu;
        if (df < 0.05) break;
        const double un = u - f / df;
        if (!(un > 1.2)) { u = std::max(1.2, 0.5 * u); continue; }
        if (std::fabs(un - u) < 1e-12 * u) { u = un; break; }
        u = un;
    }
    return std::max(kMinHeight, kTwoPi * u);
}

double z_term(std::int64_t, double t, const PrecisionConfig& cfg) {
    return z_eval(CriticalHeight(t), cfg);
}

}  // namespace

GramPoint gram_point(std::int64_t nu, const PrecisionConfig& cfg) {
    cfg.validate();
    if (nu < 1) throw std::domain_error("gram_point: nu must be >= 1");
    const double target = kPi * static_cast<double>(nu);
    const double t = solve_theta_equals(target, invert_theta_main(target), cfg);
    return {nu, t};
}

namespace detail {

GramIndexRange gram_index_range(double a, double b, const PrecisionConfig& cfg) {
    const double ta = theta_at(a, cfg) / kPi;
    const double tb = theta_at(b, cfg) / kPi;
    std::int64_t first = static_cast<std::int64_t>(std::ceil(ta));
    std::int64_t last = static_cast<std::int64_t>(std::floor(tb));
    first = std::max<std::int64_t>(first, 1);
    return {first, last};
}

double gram_walk_sum(std::int64_t first, std::int64_t last, std::int64_t step,
                     const PrecisionConfig& cfg,
                     double (*term)(std::int64_t nu, double t, const PrecisionConfig& cfg)) {
    if (last < first) return 0.0;
    const std::int64_t count = (last - first) / step + 1;

    auto chunk = [&](std::int64_t c_lo, std::int64_t c_hi) {
        NeumaierSum acc;
        std::int64_t nu = first + c_lo * step;
        double t = gram_point(nu, cfg).t;
        acc.add(term(nu, t, cfg));
        for (std::int64_t i = c_lo + 1; i < c_hi; ++i) {
            nu += step;
            const double target = kPi * static_cast<double>(nu);
            // density prediction then Newton; quadratic convergence makes two
            // corrections plenty at Gram spacing
            t += static_cast<double>(step) * kPi / theta_deriv_at(t, cfg);
            const double tol = attainable_tol(target, cfg.root_tol);
            for (int k = 0; k < 4; ++k) {
                const double resid = theta_at(t, cfg) - target;
                if (std::fabs(resid) <= tol) break;
                t -= resid / theta_deriv_at(t, cfg);
            }
            acc.add(term(nu, t, cfg));
        }
        return acc;
    };
    return partitioned_sum(0, count, chunk);
}

}  // namespace detail

std::vector<GramPoint> gram_points_in(double a, double b, const PrecisionConfig& cfg) {
    cfg.validate();
    if (!(a >= kMinHeight) || !(b >= a))
        throw std::domain_error("gram_points_in: requires 7 <= a <= b");
    const auto range = detail::gram_index_range(a, b, cfg);
    std::vector<GramPoint> out;
    for (std::int64_t nu = range.first; nu <= range.last; ++nu)
        out.push_back(gram_point(nu, cfg));
    return out;
}

SumWindow make_window(double T, WindowKind kind, double psi_value) {
    if (!(T >= kMinHeight)) throw std::domain_error("make_window: requires T >= 7");
    const double lnT = std::log(T);
    switch (kind) {
        case WindowKind::H1: {
            if (!(psi_value > 0)) throw std::domain_error("make_window: H1 needs psi > 0");
            return {T, std::pow(T, 0.75) * psi_value * std::sqrt(lnT), kind, psi_value};
        }
        case WindowKind::H2: {
            const double classical = lnT / (6.0 * std::log(lnT));
            const double bound = std::max(classical, std::sqrt(lnT) * (1.0 + 1e-12));
            if (!(psi_value > 0) || !(psi_value < bound))
                throw std::domain_error("make_window: H2 psi out of admissible range");
            return {T, std::pow(T, 1.0 / 6.0) * psi_value * std::pow(lnT, 5.0), kind, psi_value};
        }
        case WindowKind::H:
            return {T, std::pow(T, 1.0 / 6.0) * std::pow(lnT, 6.0), kind, 0.0};
    }
    throw std::domain_error("make_window: unknown kind");
}

namespace {

// Gram sum over one index class.  parity_even selects t_{2nu} (even indices).
double class_sum(const SumWindow& w, const PrecisionConfig& cfg, IntegralBackend backend,
                 bool parity_even) {
    cfg.validate();
    if (backend == IntegralBackend::main_term) {
        // smoothed count of one index class times the class mean of Z (= 2)
        const double dtheta = detail::theta_asymptotic(w.T + w.H, cfg.theta_correction_terms) -
                              detail::theta_asymptotic(w.T, cfg.theta_correction_terms);
        return dtheta / kPi;
    }
    auto range = detail::gram_index_range(w.T, w.T + w.H, cfg);
    std::int64_t first = range.first;
    if ((first % 2 == 0) != parity_even) ++first;
    std::int64_t last = range.last;
    if ((last % 2 == 0) != parity_even) --last;
    if (last < first) return 0.0;
    return detail::gram_walk_sum(first, last, 2, cfg, z_term);
}

}  // namespace

double sum_even(const SumWindow& w, const PrecisionConfig& cfg, IntegralBackend backend) {
    return class_sum(w, cfg, backend, true);
}

double sum_odd(const SumWindow& w, const PrecisionConfig& cfg, IntegralBackend backend) {
    if (backend == IntegralBackend::main_term) return class_sum(w, cfg, backend, false);
    return -class_sum(w, cfg, backend, false);
}

Lemma1Estimate lemma1_estimate(double T, const PrecisionConfig& cfg, IntegralBackend backend) {
    if (!(T >= 1e3)) throw std::domain_error("lemma1_estimate: requires T >= 1e3");
    const double s = sum_even(make_window(T, WindowKind::H), cfg, backend);
    const double lnT = std::log(T);
    const double main = std::pow(T, 1.0 / 6.0) * std::pow(lnT, 7.0) / kTwoPi;
    return {s, main, s / main - 1.0};
}

double titchmarsh_pair_sum(std::int64_t M, std::int64_t N, const PrecisionConfig& cfg) {
    cfg.validate();
    if (!(M >= 1) || !(N > M)) throw std::domain_error("titchmarsh_pair_sum: requires 1 <= M < N");

    // pairs (nu, nu+1) for nu = M+1..N; each chunk recomputes its leading
    // point so chunks stay independent
    auto chunk = [&](std::int64_t lo, std::int64_t hi) {
        NeumaierSum acc;
        std::int64_t nu = M + 1 + lo;
        double t = gram_point(nu, cfg).t;
        double zsq_prev = zeta_abs_sq(CriticalHeight(t), cfg);
        for (std::int64_t i = lo; i < hi; ++i) {
            const std::int64_t next = M + 1 + i + 1;
            const double target = kPi * static_cast<double>(next);
            t += kPi / detail::theta_asymptotic_derivative(t, cfg.theta_correction_terms);
            const double tol = std::max(cfg.root_tol, std::fabs(target) * 4.5e-16);
            for (int k = 0; k < 4; ++k) {
                const double resid =
                    detail::theta_asymptotic(t, cfg.theta_correction_terms) - target;
                if (std::fabs(resid) <= tol) break;
                t -= resid / detail::theta_asymptotic_derivative(t, cfg.theta_correction_terms);
            }
            const double zsq = zeta_abs_sq(CriticalHeight(t), cfg);
            acc.add(zsq_prev * zsq);
            zsq_prev = zsq;
        }
        return acc;
    };
    return partitioned_sum(0, N - M, chunk);
}

}  // namespace zetalab
