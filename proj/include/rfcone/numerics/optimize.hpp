#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "rfcone/numerics/interval.hpp"

namespace rfcone {

struct MaximizeOptions {
    std::size_t samples = 10000;
};

struct Maximum {
    double argmax;
    double value;
};

/// Maximum of f over the closed domain: a dense scan with both endpoints
/// included, then golden-section refinement on the two cells around the best
/// sample. Ties resolve to the smallest argmax.
template <class F>
Maximum maximize_1d(F&& f, Interval domain, double tol, MaximizeOptions options = {}) {
    if (options.samples < 2) throw std::invalid_argument("maximize_1d needs at least 2 samples");
    const std::size_t n = options.samples;
    const double step = domain.width() / static_cast<double>(n - 1);
    auto node = [&](std::size_t k) { return k + 1 == n ? domain.hi : domain.lo + step * static_cast<double>(k); };

    std::size_t best = 0;
    double best_value = f(node(0));
    for (std::size_t k = 1; k < n; ++k) {
        double v = f(node(k));
        if (v > best_value) {
            best_value = v;
            best = k;
        }
    }
    Maximum result{node(best), best_value};

    double a = node(best == 0 ? 0 : best - 1);
    double b = node(best + 1 >= n ? n - 1 : best + 1);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    const double x = fc >= fd ? c : d;
    const double fx = fc >= fd ? fc : fd;
    if (fx > result.value || (fx == result.value && x < result.argmax)) result = {x, fx};
    return result;
}

}  // namespace rfcone
