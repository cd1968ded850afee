#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

// Requested tolerance could not be reached.  Carries the best value obtained
// so far plus the error estimate at the point of giving up, so callers can
// decide whether the partial result is still usable.
class tolerance_error : public std::runtime_error {
public:
    tolerance_error(const std::string& what, double best_value, double err_estimate)
        : std::runtime_error(what), best_value_(best_value), err_estimate_(err_estimate) {}

    double best_value() const noexcept { return best_value_; }
    double err_estimate() const noexcept { return err_estimate_; }

private:
    double best_value_;
    double err_estimate_;
};

// A bracketed root solve failed to converge.  Reports the bracket it was
// stuck in.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double lo, double hi)
        : std::runtime_error(what + " [bracket " + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]"),
          lo_(lo), hi_(hi) {}

    double bracket_lo() const noexcept { return lo_; }
    double bracket_hi() const noexcept { return hi_; }

private:
    double lo_;
    double hi_;
};

}  // namespace zetalab
