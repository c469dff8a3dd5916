#pragma once

#include <cmath>

#include "rfcone/numerics/errors.hpp"
#include "rfcone/numerics/interval.hpp"
#include "rfcone/numerics/polynomial.hpp"

namespace rfcone {

struct RootOptions {
    bool newton_polish = false;
    int max_iterations = 400;
};

/// Bisection on a sign-changing bracket. Returns the midpoint of the final
/// bracket, whose width is at most tol.
template <class F>
double bisect(F&& f, Interval bracket, double tol, int max_iterations = 400) {
    double lo = bracket.lo, hi = bracket.hi;
    double f_lo = f(lo), f_hi = f(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo < 0.0) == (f_hi < 0.0)) throw NoSignChange(lo, hi, f_lo, f_hi);
    for (int it = 0; it < max_iterations && hi - lo > tol; ++it) {
        double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;  // bracket at machine resolution
        double f_mid = f(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return lo + 0.5 * (hi - lo);
}

/// Root of p inside a sign-changing bracket.
inline double find_root(const Polynomial& p, Interval bracket, double tol, RootOptions options = {}) {
    double x = bisect([&](double t) { return p(t); }, bracket, tol, options.max_iterations);
    if (!options.newton_polish) return x;

    // Newton steps are accepted only while they stay inside the tol-bracket
    // found by bisection.
    const Polynomial dp = p.derivative();
    const double lo = std::max(bracket.lo, x - tol), hi = std::min(bracket.hi, x + tol);
    for (int it = 0; it < 8; ++it) {
        double slope = dp(x);
        if (slope == 0.0) break;
        double next = x - p(x) / slope;
        if (!(next >= lo && next <= hi)) break;
        if (next == x) break;
        x = next;
    }
    return x;
}

}  // namespace rfcone
