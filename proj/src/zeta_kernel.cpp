// Hot loop of every Z(t) evaluation.  This translation unit is compiled with
// -ffast-math so the cosine call vectorizes through libmvec; nothing in here
// relies on strict IEEE ordering.  Compensated accumulation lives in other
// translation units and must stay away from these flags.

#include <cmath>

namespace zetalab::detail {

namespace {
// 2*pi split for Cody-Waite reduction; k*(A+B+C) carries ~1e-32 residual.
constexpr double kPi2A = 6.283185243606567;        // 0x1.921fb50000000p+2
constexpr double kPi2B = 6.357301884918343e-08;    // 0x1.110b460000000p-24
constexpr double kPi2C = 2.4492935982947064e-16;   // 0x1.1a62633145c07p-52
constexpr double kInv2Pi = 0.15915494309189535;
}  // namespace

double rs_main_sum(double t, double theta_t, const double* ln_n,
                   const double* inv_sqrt_n, int count) {
    double acc = 0.0;
#pragma omp simd reduction(+ : acc)
    for (int i = 0; i < count; ++i) {
        // exact two-product keeps the cancellation theta_t - t*ln n clean
        double p_hi = t * ln_n[i];
        double p_lo = std::fma(t, ln_n[i], -p_hi);
        double arg = (theta_t - p_hi) - p_lo;
        double k = std::nearbyint(arg * kInv2Pi);
        double r = std::fma(-k, kPi2A, arg);
        r = std::fma(-k, kPi2B, r);
        r = std::fma(-k, kPi2C, r);
        acc += inv_sqrt_n[i] * std::cos(r);
    }
    return acc;
}

}  // namespace zetalab::detail
