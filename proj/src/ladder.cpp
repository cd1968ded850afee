#include "zetalab/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "zetalab/errors.hpp"
#include "zetalab/summation.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kQuadratureBaseCap = 1.0e8;

double density(double t, const LadderConfig& cfg) {
    if (cfg.backend == IntegralBackend::main_term) return j_main_term_density(t);
    return zeta_abs_sq(CriticalHeight(t), cfg.precision);
}

double j_inc(double a, double b, const LadderConfig& cfg) {
    return j_increment(a, b, cfg.backend, cfg.precision).value;
}

// Solver tolerance in integral units: below this the defining function is
// quadrature noise.
double g_tolerance(double rho, const LadderConfig& cfg) {
    return cfg.precision.quad_abs_tol + cfg.precision.quad_rel_tol * std::max(1.0, rho);
}

// Solves  j(u0, u) + beta*(u - u0) = rho  for u >= u0 (rho >= 0, beta >= 0).
// The left side is nondecreasing in u; Newton with the backend density as
// slope, clamped into a maintained bracket, bisection when Newton stalls
// (the density vanishes at zeros of Z).  g_tol is the acceptance band in
// integral units, width_tol the bracket-width acceptance in t units.
double solve_increment_up(double u0, double beta, double rho, const LadderConfig& cfg,
                          double g_tol, double width_tol) {
    if (rho <= 0.0) return u0;

    double u = u0, F = 0.0;  // running state: F = j(u0, u)
    auto g_at = [&](double target) {
        if (target > u)
            F += j_inc(u, target, cfg);
        else if (target < u)
            F -= j_inc(target, u, cfg);
        u = target;
        return F + beta * (u - u0) - rho;
    };

    double lo = u0;
    // smoothed density for the first step: the pointwise Z^2 may vanish
    double step = rho / (j_main_term_density(u0) + beta);
    double hi = u0 + step, g_hi = g_at(hi);
    int expansions = 0;
    while (g_hi < 0.0) {
        lo = hi;
        step *= 1.6;
        hi += step;
        g_hi = g_at(hi);
        if (++expansions > 200)
            throw convergence_error("ladder: increment bracket expansion failed", lo, hi);
    }

    double x = u, g = g_hi;
    for (int it = 0; it < 300; ++it) {
        if (std::fabs(g) <= g_tol) return x;
        if (g > 0) hi = x; else lo = x;
        if (hi - lo <= width_tol) return 0.5 * (lo + hi);
        double next = x - g / (density(x, cfg) + beta);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        x = next;
        g = g_at(x);
    }
    throw convergence_error("ladder: increment solve failed to converge", lo, hi);
}

// Standard tolerances: integral-noise band for g, root_tol relative in t.
double solve_increment_up(double u0, double beta, double rho, const LadderConfig& cfg) {
    return solve_increment_up(u0, beta, rho, cfg, g_tolerance(rho, cfg),
                              cfg.root_tol * std::max(1.0, std::fabs(u0)));
}

// Solves  j(x, top) = (1-c) x  for x < top (the downward map).  The defining
// function is strictly decreasing with slope <= -(1-c), so this direction is
// never ill-conditioned.
double solve_phi1_scratch(double top, const LadderConfig& cfg) {
    const double omc = 1.0 - cfg.c;
    const double tol_g = g_tolerance(omc * top, cfg);

    double x = top, F = 0.0;  // F = j(x, top)
    auto g_at = [&](double target) {
        if (target < x)
            F += j_inc(target, x, cfg);
        else if (target > x)
            F -= j_inc(x, target, cfg);
        x = target;
        return F - omc * x;
    };

    double hi = top;
    double step = omc * top / (j_main_term_density(top) + omc);
    double lo = std::max(top - step, kMinHeight + 0.5), g_lo = g_at(lo);
    int expansions = 0;
    while (g_lo < 0.0) {
        hi = lo;
        step *= 1.6;
        lo -= step;
        if (lo < kMinHeight)
            throw convergence_error("ladder: phi1 bracket fell below the domain", lo, hi);
        g_lo = g_at(lo);
        if (++expansions > 200)
            throw convergence_error("ladder: phi1 bracket expansion failed", lo, hi);
    }

    double xx = x, g = g_lo;
    for (int it = 0; it < 200; ++it) {
        if (std::fabs(g) <= tol_g) return xx;
        if (g > 0) lo = xx; else hi = xx;
        if (hi - lo <= cfg.root_tol * std::max(1.0, std::fabs(xx)))
            return 0.5 * (lo + hi);
        double next = xx + g / (density(xx, cfg) + omc);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        xx = next;
        g = g_at(xx);
    }
    throw convergence_error("ladder: phi1 solve failed to converge", lo, hi);
}

void check_quadrature_cap(double T, const LadderConfig& cfg, const char* who) {
    if (cfg.backend == IntegralBackend::quadrature && T > kQuadratureBaseCap)
        throw std::range_error(std::string(who) +
                               ": base height exceeds the quadrature backend cap (~1e8); "
                               "use the main-term backend");
}

}  // namespace

void LadderConfig::validate() const {
    precision.validate();
    if (!(c > 0.0 && c < 1.0))
        throw std::domain_error("LadderConfig: c must lie in (0,1)");
    if (!(1.0 - c > 0.42 && 1.0 - c < 0.43))
        throw std::domain_error("LadderConfig: (1-c) must lie in (0.42, 0.43)");
    if (!(root_tol > 0)) throw std::domain_error("LadderConfig: root_tol must be positive");
}

double phi1(double T, const LadderConfig& cfg) {
    cfg.validate();
    if (!(T >= 100.0)) throw std::domain_error("phi1: requires T >= 100");
    check_quadrature_cap(T, cfg, "phi1");
    return solve_phi1_scratch(T, cfg);
}

double phi1_inverse(double T, const LadderConfig& cfg) {
    cfg.validate();
    if (!(T >= kMinHeight)) throw std::domain_error("phi1_inverse: requires T >= 7");
    check_quadrature_cap(T, cfg, "phi1_inverse");
    return solve_increment_up(T, 0.0, (1.0 - cfg.c) * T, cfg);
}

ReverseIterates reverse_iterates(double T, int k, const LadderConfig& cfg) {
    cfg.validate();
    if (!(T >= 100.0)) throw std::domain_error("reverse_iterates: requires T >= 100");
    if (k < 1 || k > 10) throw std::domain_error("reverse_iterates: requires 1 <= k <= 10");
    check_quadrature_cap(T, cfg, "reverse_iterates");
    ReverseIterates out{T, k, {T}};
    out.heights.reserve(k + 1);
    for (int r = 1; r <= k; ++r)
        out.heights.push_back(solve_increment_up(out.heights.back(), 0.0,
                                                 (1.0 - cfg.c) * out.heights.back(), cfg));
    return out;
}

double forward_iterate(double t, int r, const LadderConfig& cfg) {
    cfg.validate();
    if (r < 0) throw std::domain_error("forward_iterate: requires r >= 0");
    double x = t;
    for (int i = 0; i < r; ++i) {
        if (!(x >= 100.0))
            throw std::domain_error("forward_iterate: iterate fell below the phi1 domain");
        x = solve_phi1_scratch(x, cfg);
    }
    return x;
}

PartitionReport partition_report(double T, int k, const LadderConfig& cfg) {
    PartitionReport rep;
    rep.iterates = reverse_iterates(T, k, cfg);
    const auto& h = rep.iterates.heights;

    NeumaierSum total;
    for (int r = 1; r <= k; ++r) {
        rep.segment_lengths.push_back(h[r] - h[r - 1]);
        const auto seg = j_increment(h[r - 1], h[r], cfg.backend, cfg.precision);
        rep.segment_integrals.push_back(seg.value);
        rep.segment_integral_errs.push_back(seg.err_estimate);
        total.add(seg.value);
    }
    for (int r = 1; r < k; ++r) {
        rep.length_ratios.push_back(rep.segment_lengths[r] / rep.segment_lengths[r - 1]);
        rep.integral_ratios.push_back(rep.segment_integrals[r] / rep.segment_integrals[r - 1]);
    }
    rep.segments_total = total.value();
    const auto whole = j_increment(h[0], h[k], cfg.backend, cfg.precision);
    rep.whole_integral = whole.value;
    rep.whole_err = whole.err_estimate;
    return rep;
}

namespace {

constexpr int kCacheNodes = 13;

// Chebyshev interpolants of the downward iterates phi1^r over spans of the
// integration interval.  Values are stored as offsets from the tower at the
// panel's left edge: the iterates themselves are ~1e6-scale while the
// certification tolerance is 1e-8 absolute, so interpolating raw heights
// would drown in coefficient roundoff.  coeffs[r-1] holds phi1^r - anchor,
// r = 1..levels, with c[0] pre-halved.
struct CachePanel {
    double a, b;
    std::vector<double> anchors;
    std::vector<std::vector<double>> coeffs;
};

double cheb_combine(const std::vector<double>& c, double x) {
    double b1 = 0.0, b2 = 0.0;
    for (int j = static_cast<int>(c.size()) - 1; j >= 1; --j) {
        double next = c[j] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = next;
    }
    return c[0] + x * b1 - b2;
}

struct IterateCache {
    std::vector<CachePanel> panels;

    double eval(int r, double t) const {
        auto it = std::upper_bound(panels.begin(), panels.end(), t,
                                   [](double v, const CachePanel& p) { return v < p.b; });
        if (it == panels.end()) it = std::prev(panels.end());
        const CachePanel& p = *it;
        const double x = std::clamp(2.0 * (t - p.a) / (p.b - p.a) - 1.0, -1.0, 1.0);
        return p.anchors[r - 1] + cheb_combine(p.coeffs[r - 1], x);
    }
};

// One continuation step of the whole downward tower from tower[0] to
// t_next > tower[0].  Uses the pairwise identity
//   j(x1, x2) + (1-c)(x2 - x1) = j(t1, t2)   for x_i = phi1(t_i),
// so each level only integrates over its own short sliver.  The interpolant
// certification needs these solves accurate to ~root_tol in t absolutely, so
// the slivers are integrated with tightened tolerances and the solver gets
// an absolute width gate; beta = 1-c keeps Newton's slope away from zero
// even at zeros of Z.
void advance_tower(std::vector<double>& tower, double t_next, const LadderConfig& cfg) {
    const double omc = 1.0 - cfg.c;
    constexpr double eps = 2.22e-16;
    double rho = j_inc(tower[0], t_next, cfg);
    tower[0] = t_next;
    for (std::size_t r = 1; r < tower.size(); ++r) {
        const double prev = tower[r];
        // machine floors: below ~eps*height neither g nor the bracket width
        // is representable
        const double g_tol = std::max(0.25 * cfg.root_tol * omc, 48.0 * eps * prev);
        const double width_tol = std::max(0.5 * cfg.root_tol, 8.0 * eps * prev);
        tower[r] = solve_increment_up(prev, omc, rho, cfg, g_tol, width_tol);
        rho = j_inc(prev, tower[r], cfg);
    }
}

// Tightened integral tolerances for the continuation slivers (they are at
// most a panel long, so the extra refinement costs next to nothing); the
// absolute part respects the Z evaluation jitter at the working height.
LadderConfig cache_config(const LadderConfig& cfg, double height) {
    LadderConfig tight = cfg;
    tight.precision.quad_rel_tol = std::min(cfg.precision.quad_rel_tol, 1e-11);
    tight.precision.quad_abs_tol =
        std::max({1e-13, 32.0 * 2.22e-16 * height, 0.02 * cfg.root_tol});
    return tight;
}

// Builds interpolants for phi1^r (r = 1..levels) over [A, B], anchored at
// the tower of A.  A panel whose midpoint disagrees with a direct
// continuation solve by more than 10*root_tol is bisected.
IterateCache build_iterate_cache(double A, double B, const std::vector<double>& towerA,
                                 int levels, double width, const LadderConfig& cfg) {
    IterateCache cache;
    if (levels == 0) return cache;

    std::vector<double> walk(towerA.begin(), towerA.begin() + levels + 1);

    struct Pending { double a, b; int depth; };
    std::vector<Pending> queue;
    for (double a = A; a < B;) {
        double b = std::min(a + width, B);
        queue.push_back({a, b, 0});
        a = b;
    }

    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const auto [a, b, depth] = queue[qi];
        const std::vector<double> panel_start_walk = walk;

        // ascending Chebyshev nodes; node index j maps to the standard
        // descending-node index (kCacheNodes-1-j) in the DCT below
        std::vector<std::vector<double>> node_towers(kCacheNodes);
        for (int j = 0; j < kCacheNodes; ++j) {
            const double x = -std::cos(M_PI * (2.0 * j + 1.0) / (2.0 * kCacheNodes));
            advance_tower(walk, 0.5 * (a + b) + 0.5 * (b - a) * x, cfg);
            node_towers[j] = walk;
        }

        CachePanel panel{a, b, {}, {}};
        panel.anchors.assign(panel_start_walk.begin() + 1, panel_start_walk.end());
        panel.coeffs.resize(levels);
        for (int r = 1; r <= levels; ++r) {
            std::vector<double>& c = panel.coeffs[r - 1];
            c.assign(kCacheNodes, 0.0);
            const double anchor = panel.anchors[r - 1];
            for (int m = 0; m < kCacheNodes; ++m) {
                double s = 0.0;
                for (int j = 0; j < kCacheNodes; ++j) {
                    const int i = kCacheNodes - 1 - j;
                    s += (node_towers[j][r] - anchor) *
                         std::cos(M_PI * m * (2.0 * i + 1.0) / (2.0 * kCacheNodes));
                }
                c[m] = 2.0 * s / kCacheNodes;
            }
            c[0] *= 0.5;
        }

        // certify at an off-node abscissa by a direct continuation solve
        const double x_check = 0.123456789;
        const double t_check = 0.5 * (a + b) + 0.5 * (b - a) * x_check;
        std::vector<double> probe = node_towers[kCacheNodes / 2];  // node below t_check
        advance_tower(probe, t_check, cfg);
        bool ok = true;
        double worst_diff = 0.0;
        // Headroom over solver noise: a level sitting near a zero of Z
        // amplifies the rho noise of the level above by Z^2/(1-c) (up to
        // ~100x), so per-solve noise ~root_tol cascades to ~100 root_tol per
        // level.  Genuine interpolation failures show up at 1e-3 and above,
        // three orders beyond this gate.
        const double cert_tol =
            (levels + 1) * std::max(100.0 * cfg.root_tol, 64.0 * 2.22e-16 * b);
        for (int r = 1; r <= levels; ++r) {
            const double diff = std::fabs(panel.anchors[r - 1] +
                                          cheb_combine(panel.coeffs[r - 1], x_check) - probe[r]);
            worst_diff = std::max(worst_diff, diff);
            if (diff > cert_tol) ok = false;
        }

        if (!ok) {
            if (depth >= 8) {
                char msg[160];
                std::snprintf(msg, sizeof(msg),
                              "product_integral: iterate interpolation cannot reach the "
                              "midpoint tolerance (worst %.3e vs %.3e at [%.6f, %.6f])",
                              worst_diff, cert_tol, a, b);
                throw tolerance_error(msg, worst_diff, 0.0);
            }
            walk = panel_start_walk;
            queue[qi] = {a, 0.5 * (a + b), depth + 1};
            queue.insert(queue.begin() + qi + 1, {0.5 * (a + b), b, depth + 1});
            --qi;
            continue;
        }
        advance_tower(walk, b, cfg);  // park the walk at the panel edge
        cache.panels.push_back(std::move(panel));
    }
    return cache;
}

}  // namespace

QuadratureResult product_integral(double T, double l, int k, const LadderConfig& cfg) {
    cfg.validate();
    if (!(T >= 1e3)) throw std::domain_error("product_integral: requires T >= 1e3");
    if (!(l > 0)) throw std::domain_error("product_integral: requires l > 0");
    if (k < 1 || k > 8) throw std::domain_error("product_integral: requires 1 <= k <= 8");
    check_quadrature_cap(T + 2.0 * l, cfg, "product_integral");

    // endpoint towers: [T]^r ascending, then [T+2l]^r by continuation via
    // j(y1, y2) = (1-c)(prev2 - prev1) + j(prev1, prev2)
    const ReverseIterates towT = reverse_iterates(T, k, cfg);
    std::vector<double> towB(k + 1);
    towB[0] = T + 2.0 * l;
    for (int r = 1; r <= k; ++r) {
        const double rho = (1.0 - cfg.c) * (towB[r - 1] - towT.heights[r - 1]) +
                           j_inc(towT.heights[r - 1], towB[r - 1], cfg);
        towB[r] = solve_increment_up(towT.heights[r], 0.0, rho, cfg);
    }
    const double A = towT.heights[k];
    const double B = towB[k];

    // forward-iterate anchor at A: phi1^r(A) = [T]^{k-r}
    std::vector<double> fwdA(k);
    for (int r = 0; r < k; ++r) fwdA[r] = towT.heights[k - r];

    const double width = (cfg.backend == IntegralBackend::main_term)
                             ? (B - A) / 8.0
                             : 0.25 * kTwoPi / (k * std::log(T / kTwoPi));

    const IterateCache cache = build_iterate_cache(A, B, fwdA, k - 1, width, cache_config(cfg, B));

    auto integrand = [&](double t) {
        double prod = density(t, cfg);
        for (int r = 1; r < k; ++r) prod *= density(cache.eval(r, t), cfg);
        return prod;
    };
    return integrate(integrand, A, B, cfg.precision, [width](double) { return width; });
}

}  // namespace zetalab
