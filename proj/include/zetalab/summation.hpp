#pragma once

#include <cmath>
#include <cstddef>

namespace zetalab {

// Neumaier compensated accumulator.  Error-free transformation of each
// addition; the compensation is folded in only when the value is read.
// Windows at large heights contain ~1e8 terms, so plain accumulation would
// lose digits the tests care about.
class NeumaierSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    void add(const NeumaierSum& other) {
        add(other.sum_);
        comp_ += other.comp_;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace zetalab
