#ifndef RIESZ_SRC_ACCUM_HPP
#define RIESZ_SRC_ACCUM_HPP

#include <cmath>

namespace riesz::detail {

// Neumaier compensated accumulator. Error stays at a few ulps of the true sum
// independently of the number of addends.
struct Neumaier {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }

    double value() const { return sum + comp; }
};

} // namespace riesz::detail

#endif
