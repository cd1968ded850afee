#include "zetalab/zeta.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "zetalab/theta.hpp"

namespace zetalab {

namespace detail {

#include "rs_cheb_tables.inc"

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

struct Tables {
    std::vector<double> ln_n;
    std::vector<double> inv_sqrt_n;
    Tables() : ln_n(kTableSize), inv_sqrt_n(kTableSize) {
        for (int n = 1; n <= kTableSize; ++n) {
            ln_n[n - 1] = std::log(static_cast<double>(n));
            inv_sqrt_n[n - 1] = 2.0 / std::sqrt(static_cast<double>(n));
        }
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

// Clenshaw on [0,1].
double cheb_eval(const double* c, int len, double p) {
    const double x = 2.0 * (2.0 * p - 1.0);
    double b1 = 0.0, b2 = 0.0;
    for (int k = len - 1; k >= 1; --k) {
        double next = c[k] + x * b1 - b2;
        b2 = b1;
        b1 = next;
    }
    return 0.5 * c[0] + 0.5 * x * b1 - b2;
}

template <std::size_t Len>
double cheb_eval(const double (&c)[Len], double p) {
    return cheb_eval(c, static_cast<int>(Len), p);
}

}  // namespace

const double* ln_table() { return tables().ln_n.data(); }
const double* inv_sqrt_table() { return tables().inv_sqrt_n.data(); }

double rs_correction_c(int k, double p) {
    switch (k) {
        case 0: return cheb_eval(kC0, p);
        case 1: return cheb_eval(kC1, p);
        case 2: return cheb_eval(kC2, p);
        case 3: return cheb_eval(kC3, p);
        case 4: return cheb_eval(kC4, p);
        default: throw std::domain_error("rs_correction_c: k must be 0..4");
    }
}

double rs_remainder(double a, int terms_in_main_sum) {
    const double p = a - terms_in_main_sum;
    const double inv_a = 1.0 / a;
    double series = cheb_eval(kC4, p);
    series = series * inv_a + cheb_eval(kC3, p);
    series = series * inv_a + cheb_eval(kC2, p);
    series = series * inv_a + cheb_eval(kC1, p);
    series = series * inv_a + cheb_eval(kC0, p);
    const double sign = (terms_in_main_sum % 2 == 1) ? 1.0 : -1.0;  // (-1)^{N-1}
    return sign * series / std::sqrt(a);
}

}  // namespace detail

double z_eval(CriticalHeight t, const PrecisionConfig& cfg) {
    cfg.validate();
    if (t.t > kMaxDirectHeight)
        throw std::range_error("z_eval: t exceeds the direct-evaluation ceiling");

    const double a = std::sqrt(t.t / detail::kTwoPi);
    const int n_terms = static_cast<int>(a);
    const double theta_t = theta(t, cfg);

    double z = detail::rs_main_sum(t.t, theta_t, detail::ln_table(),
                                   detail::inv_sqrt_table(), n_terms);
    if (cfg.rs_correction_order >= 1) z += detail::rs_remainder(a, n_terms);
    return z;
}

double zeta_abs_sq(CriticalHeight t, const PrecisionConfig& cfg) {
    const double z = z_eval(t, cfg);
    return z * z;
}

}  // namespace zetalab
