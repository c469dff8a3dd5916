#pragma once

#include <stdexcept>
#include <string>

namespace rfcone {

/// Closed real interval with lo < hi.
struct Interval {
    double lo;
    double hi;

    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo < hi))
            throw std::invalid_argument("Interval requires lo < hi, got [" + std::to_string(lo) +
                                        ", " + std::to_string(hi) + "]");
    }

    double width() const noexcept { return hi - lo; }
    double midpoint() const noexcept { return lo + 0.5 * (hi - lo); }
    bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

}  // namespace rfcone
