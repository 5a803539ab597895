#pragma once

#include <cmath>

namespace rankin {

/// Neumaier-compensated accumulator. Mass sums feed bound ratios that must
/// hold to 1e-14 relative; plain summation drifts past that around n ~ 50.
class KahanSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace rankin
