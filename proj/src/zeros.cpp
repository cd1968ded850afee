#include "zetalab/zeros.hpp"

#include <cmath>
#include <stdexcept>

#include "zetalab/parallel.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

ZeroOrdinate bisect_zero(double lo, double hi, double z_lo, const PrecisionConfig& cfg) {
    for (int it = 0; it < 200 && hi - lo > cfg.root_tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double z_mid = z_eval(CriticalHeight(mid), cfg);
        if ((z_lo < 0) == (z_mid < 0)) {
            lo = mid;
            z_lo = z_mid;
        } else {
            hi = mid;
        }
    }
    return {0.5 * (lo + hi), 0.5 * (hi - lo)};
}

}  // namespace

std::vector<ZeroOrdinate> find_zeros(double a, double b, const PrecisionConfig& cfg) {
    cfg.validate();
    if (!(a >= kMinHeight) || !(b > a))
        throw std::domain_error("find_zeros: requires 7 <= a < b");

    const double step = 0.25 * kTwoPi / std::log(b / kTwoPi) / 2.0;  // (2pi/ln(b/2pi))/8
    const std::int64_t cells = static_cast<std::int64_t>(std::ceil((b - a) / step));

    // each chunk scans its own cells; a sign change across a chunk boundary
    // belongs to the cell that contains it, so concatenation is exact
    auto scan = [&](std::int64_t lo_cell, std::int64_t hi_cell) {
        std::vector<ZeroOrdinate> found;
        double t_prev = a + (b - a) * static_cast<double>(lo_cell) / static_cast<double>(cells);
        double z_prev = z_eval(CriticalHeight(t_prev), cfg);
        for (std::int64_t i = lo_cell; i < hi_cell; ++i) {
            double t_next = a + (b - a) * static_cast<double>(i + 1) / static_cast<double>(cells);
            const double z_next = z_eval(CriticalHeight(t_next), cfg);
            if ((z_prev < 0) != (z_next < 0))
                found.push_back(bisect_zero(t_prev, t_next, z_prev, cfg));
            t_prev = t_next;
            z_prev = z_next;
        }
        return found;
    };

    std::vector<ZeroOrdinate> zeros;
    for (auto& chunk : partitioned_map<std::vector<ZeroOrdinate>>(0, cells, scan))
        zeros.insert(zeros.end(), chunk.begin(), chunk.end());
    return zeros;
}

std::int64_t count_n0(double T, const PrecisionConfig& cfg) {
    if (!(T >= kMinHeight)) throw std::domain_error("count_n0: requires T >= 7");
    if (T <= kMinHeight + 1e-9) return 0;
    return static_cast<std::int64_t>(find_zeros(kMinHeight, T, cfg).size());
}

GapReport gap_report(double a, double b, const PrecisionConfig& cfg) {
    const auto zeros = find_zeros(a, b, cfg);
    if (zeros.size() < 2)
        throw std::domain_error("gap_report: needs at least 2 zeros in range");

    GapReport rep;
    for (const auto& z : zeros) rep.ordinates.push_back(z.gamma);
    rep.max_gap = 0.0;
    rep.max_gap_left = rep.ordinates.front();
    for (std::size_t i = 1; i < rep.ordinates.size(); ++i) {
        const double gap = rep.ordinates[i] - rep.ordinates[i - 1];
        rep.gaps.push_back(gap);
        if (gap > rep.max_gap) {
            rep.max_gap = gap;
            rep.max_gap_left = rep.ordinates[i - 1];
        }
    }
    const double g = rep.max_gap_left;
    const double lng = std::log(g);
    rep.curve_sixth_power = std::pow(g, 1.0 / 6.0) * std::pow(lng, 6.0);
    rep.curve_karatsuba = std::pow(g, 5.0 / 32.0);
    rep.curve_ivic = std::pow(g, 0.1559458);
    rep.curve_rh_conditional = 1.0 / std::log(lng);
    rep.ratio_sixth_power = rep.max_gap / rep.curve_sixth_power;
    rep.ratio_karatsuba = rep.max_gap / rep.curve_karatsuba;
    rep.ratio_ivic = rep.max_gap / rep.curve_ivic;
    rep.ratio_rh_conditional = rep.max_gap / rep.curve_rh_conditional;
    return rep;
}

bool interval_has_zero(double T, double psi_value, const PrecisionConfig& cfg) {
    if (!(T >= 1e3)) throw std::domain_error("interval_has_zero: requires T >= 1e3");
    if (psi_value < 0) throw std::domain_error("interval_has_zero: requires psi >= 0");
    const double W = std::pow(T, 1.0 / 6.0) * psi_value * psi_value * std::pow(std::log(T), 5.0);
    if (W <= 0.0) return false;
    return !find_zeros(T, T + W, cfg).empty();
}

CountIncrease count_increase(double T, CountVariant variant, double param,
                             const PrecisionConfig& cfg) {
    if (!(T >= 1e3)) throw std::domain_error("count_increase: requires T >= 1e3");
    CountIncrease out;
    out.T = T;
    const double lnT = std::log(T);
    switch (variant) {
        case CountVariant::HL1921:
            out.window = std::pow(T, 0.5 + param);
            out.reference = out.window;
            break;
        case CountVariant::Selberg:
            out.window = std::pow(T, 0.5 + param);
            out.reference = out.window * lnT;
            break;
        case CountVariant::Moser:
            out.window = std::pow(T, 5.0 / 12.0) * param * lnT * lnT * lnT;
            out.reference = out.window;
            break;
    }
    out.count = static_cast<std::int64_t>(find_zeros(T, T + out.window, cfg).size());
    out.achieved_ratio = static_cast<double>(out.count) / out.reference;
    return out;
}

}  // namespace zetalab
