#include "zetalab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/parallel.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

// 8-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kGLx[4] = {0.18343464249564980494, 0.52553240991632898582,
                            0.79666647741362673959, 0.96028985649753623168};
constexpr double kGLw[4] = {0.36268378337836198297, 0.31370664587788728734,
                            0.22238103445337447054, 0.10122853629037625915};

struct PanelSums {
    NeumaierSum value;
    NeumaierSum err;
    std::int64_t evaluations = 0;
    bool tolerance_failed = false;
};

double gl8(const std::function<double(double)>& f, double lo, double hi,
           std::int64_t& evals) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double acc = 0.0;
    for (int i = 0; i < 4; ++i) {
        acc += kGLw[i] * (f(mid - half * kGLx[i]) + f(mid + half * kGLx[i]));
    }
    evals += 8;
    return acc * half;
}

// Accept the two-half refinement when it agrees with the single sweep within
// `budget`; otherwise bisect.  GL8 converges so fast on resolved panels that
// |coarse - fine| is already a conservative error bound for the fine value.
void refine_panel(const std::function<double(double)>& f, double lo, double hi,
                  double budget, int depth, PanelSums& out) {
    const double coarse = gl8(f, lo, hi, out.evaluations);
    const double mid = 0.5 * (lo + hi);
    const double fine = gl8(f, lo, mid, out.evaluations) + gl8(f, mid, hi, out.evaluations);
    const double diff = std::fabs(fine - coarse);
    if (diff <= budget || depth >= 12) {
        out.value.add(fine);
        out.err.add(diff);
        if (diff > budget) out.tolerance_failed = true;
        return;
    }
    refine_panel(f, lo, mid, 0.5 * budget, depth + 1, out);
    refine_panel(f, mid, hi, 0.5 * budget, depth + 1, out);
}

QuadratureResult integrate_panels(const std::function<double(double)>& f,
                                  const std::vector<double>& edges,
                                  double rel_tol, double abs_tol) {
    const int n_panels = static_cast<int>(edges.size()) - 1;
    const double total_len = edges.back() - edges.front();

    // rough total to convert the relative tolerance into an absolute budget
    std::int64_t rough_evals = 0;
    NeumaierSum rough;
    for (int i = 0; i < n_panels; ++i) rough.add(gl8(f, edges[i], edges[i + 1], rough_evals));
    const double budget_total = abs_tol + rel_tol * std::fabs(rough.value());

    auto run_chunk = [&](std::int64_t lo, std::int64_t hi) {
        PanelSums sums;
        for (std::int64_t i = lo; i < hi; ++i) {
            const double w = edges[i + 1] - edges[i];
            refine_panel(f, edges[i], edges[i + 1], budget_total * (w / total_len), 0, sums);
        }
        return sums;
    };

    PanelSums total;
    for (auto& part : partitioned_map<PanelSums>(0, n_panels, run_chunk)) {
        total.value.add(part.value);
        total.err.add(part.err);
        total.evaluations += part.evaluations;
        total.tolerance_failed = total.tolerance_failed || part.tolerance_failed;
    }
    total.evaluations += rough_evals;

    QuadratureResult r;
    r.value = total.value.value();
    r.err_estimate = total.err.value();
    r.evaluations = total.evaluations;
    if (total.tolerance_failed)
        throw tolerance_error("integrate: panel refinement hit the depth limit before the budget",
                              r.value, r.err_estimate);
    return r;
}

std::vector<double> build_edges(double a, double b,
                                const std::function<double(double)>& panel_width) {
    std::vector<double> edges{a};
    double t = a;
    while (t < b) {
        double w = std::max(panel_width(t), 1e-12 * std::max(1.0, std::fabs(t)));
        t = std::min(t + w, b);
        edges.push_back(t);
    }
    return edges;
}

}  // namespace

const char* backend_name(IntegralBackend b) {
    return b == IntegralBackend::quadrature ? "quadrature" : "main-term";
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const PrecisionConfig& cfg,
                           const std::function<double(double)>& panel_width) {
    cfg.validate();
    if (b < a) throw std::domain_error("integrate: requires a <= b");
    if (a == b) return {0.0, 0.0, 0};
    return integrate_panels(f, build_edges(a, b, panel_width), cfg.quad_rel_tol,
                            cfg.quad_abs_tol);
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const PrecisionConfig& cfg) {
    const double w = (b - a) / 16.0;
    return integrate(f, a, b, cfg, [w](double) { return w; });
}

QuadratureResult j_between(double a, double b, const PrecisionConfig& cfg) {
    cfg.validate();
    if (!(a >= kMinHeight) || b < a)
        throw std::domain_error("j_between: requires 7 <= a <= b");
    if (a == b) return {0.0, 0.0, 0};
    auto integrand = [&cfg](double t) { return zeta_abs_sq(CriticalHeight(t), cfg); };
    // quarter of the local oscillation scale of Z^2
    auto width = [](double t) { return 0.25 * kTwoPi / std::log(t / kTwoPi); };
    // Z(t) carries phase-rounding jitter ~60 eps t, so no budget below
    // ~(b-a) * that jitter is attainable; widen the absolute tolerance to the
    // floor instead of grinding panels to the depth cap
    PrecisionConfig eff = cfg;
    eff.quad_abs_tol += 8.192e3 * 2.22e-16 * std::fabs(b) * (b - a);
    return integrate(integrand, a, b, eff, width);
}

double j_main_term(double T) {
    return T * std::log(T / kTwoPi) - (1.0 - 2.0 * kEulerGamma) * T;
}

double j_main_term_density(double T) {
    return std::log(T / kTwoPi) + 2.0 * kEulerGamma;
}

double j_main_increment(double a, double b) {
    const double d = b - a;
    return d * std::log(a / kTwoPi) + b * std::log1p(d / a) - (1.0 - 2.0 * kEulerGamma) * d;
}

QuadratureResult j_increment(double a, double b, IntegralBackend backend,
                             const PrecisionConfig& cfg) {
    if (backend == IntegralBackend::main_term) {
        if (!(a >= kMinHeight) || b < a)
            throw std::domain_error("j_increment: requires 7 <= a <= b");
        return {j_main_increment(a, b), 0.0, 0};
    }
    return j_between(a, b, cfg);
}

}  // namespace zetalab
