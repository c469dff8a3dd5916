#pragma once

// The decisive step of the stability proof for the cone over CP2: after
// Kato, Hardy and Young estimates the second variation is bounded below by
//
//   int 1/(4 r^2) [ cA A^2 + cB |B|^2 + cC |C|^2 + ctr tr(C)^2 ] dV r^4 dr
//
// and the proof needs (alpha, beta, eps) with all four coefficients >= 0.
// The tensor bookkeeping leading to this form (and Warner's inequality on
// CP2) is taken as given.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rfcone/numerics/polynomial.hpp"
#include "rfcone/radial.hpp"

namespace rfcone::cp2 {

template <class T>
struct ProofParameters {
    T alpha;
    T beta;
    T epsilon;
};

template <class T>
struct Coefficients {
    T c_A;
    T c_B;
    T c_C;
    T c_trC;

    T min() const { return std::min({c_A, c_B, c_C, c_trC}); }
};

namespace detail {

template <class T>
T abs_value(const T& x) {
    return x < 0 ? T(-x) : x;
}

}  // namespace detail

/// cA = 10 alpha - 39 - |4 - alpha|/eps,  cB = -38 - alpha^2 + 14 beta,
/// cC = 9 - beta^2/2,  ctr = 2 - 4 eps |4 - alpha|.
template <class T>
Coefficients<T> cp2_coefficients(const ProofParameters<T>& p) {
    if (!(p.epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
    const T gap = detail::abs_value(T(4 - p.alpha));
    return {T(10 * p.alpha - 39 - gap / p.epsilon), T(-38 - p.alpha * p.alpha + 14 * p.beta),
            T(9 - p.beta * p.beta / 2), T(2 - 4 * p.epsilon * gap)};
}

/// cC expressed through beta^2, so the boundary beta = sqrt(18) can be
/// checked exactly.
template <class T>
T cp2_c_coefficient_from_beta_squared(const T& beta_squared) {
    return T(9 - beta_squared / 2);
}

template <class T>
bool cp2_feasible(const ProofParameters<T>& p) {
    const auto c = cp2_coefficients(p);
    return c.c_A >= 0 && c.c_B >= 0 && c.c_C >= 0 && c.c_trC >= 0;
}

/// Young's inequality used for the cross term:
/// (4 - alpha) A tr C >= -eps |4 - alpha| tr(C)^2 - |4 - alpha| A^2 / (4 eps).
/// Returns lhs - rhs (non-negative when the inequality holds).
inline double young_slack(double alpha, double eps, double A, double trC) {
    const double g = std::abs(4.0 - alpha);
    return (4.0 - alpha) * A * trC + eps * g * trC * trC + g * A * A / (4.0 * eps);
}

struct KatoHardyConstants {
    double scalar;  // A component
    double vector;  // B component
    double tensor;  // C component
};

/// Lower-order constants from Kato's and Hardy's inequalities on the cone of
/// dimension n: 1/C_H for the scalar and tensor parts, twice that for the
/// vector part. (9/4, 9/2, 9/4) at n = 5.
inline KatoHardyConstants kato_hardy_constants(int n = 5) {
    const double inv = 1.0 / radial::hardy_constant(n);
    return {inv, 2.0 * inv, inv};
}

/// Scan axis lo, lo + step, ..., hi; the count is rounded so hi is hit.
struct GridAxis {
    Rational lo;
    Rational hi;
    Rational step;

    std::size_t count() const {
        if (hi < lo) throw std::invalid_argument("grid axis with hi < lo");
        if (lo == hi) return 1;
        if (!(step > 0)) throw std::invalid_argument("grid step must be positive");
        const Rational span = (hi - lo) / step;
        const auto whole = boost::multiprecision::numerator(span) / boost::multiprecision::denominator(span);
        return static_cast<std::size_t>(whole) + 1;
    }
    Rational at(std::size_t k) const { return lo + step * static_cast<long>(k); }
};

struct FeasiblePoint {
    ProofParameters<Rational> exact;
    Coefficients<double> coefficients;
};

struct FeasibleRegion {
    std::size_t scanned = 0;
    std::size_t feasible = 0;
    /// Bounding box of the feasible grid points (alpha, beta, eps).
    std::array<double, 3> hull_lo{};
    std::array<double, 3> hull_hi{};
    /// Feasible point with the largest minimum coefficient.
    std::optional<FeasiblePoint> max_margin;
    double max_margin_value = -std::numeric_limits<double>::infinity();
    /// Every grid-feasible point passed the exact rational re-check.
    bool exact_recheck_passed = true;
    std::vector<FeasiblePoint> points;
};

/// Float scan of the grid, with every feasible point re-checked in exact
/// rational arithmetic.
inline FeasibleRegion cp2_feasible_region(const GridAxis& alpha, const GridAxis& beta, const GridAxis& eps,
                                          bool keep_points = false) {
    FeasibleRegion r;
    const std::size_t na = alpha.count(), nb = beta.count(), ne = eps.count();
    for (std::size_t i = 0; i < na; ++i) {
        const Rational qa = alpha.at(i);
        const double a = to_double(qa);
        for (std::size_t j = 0; j < nb; ++j) {
            const Rational qb = beta.at(j);
            const double b = to_double(qb);
            for (std::size_t k = 0; k < ne; ++k) {
                const Rational qe = eps.at(k);
                const double e = to_double(qe);
                ++r.scanned;
                const ProofParameters<double> p{a, b, e};
                const auto c = cp2_coefficients(p);
                // Scan tolerance absorbs rounding of boundary points such as alpha = 4.5.
                if (c.min() < -1e-12) continue;
                const ProofParameters<Rational> exact{qa, qb, qe};
                if (!cp2_feasible(exact)) {
                    // Boundary points that only pass in floating point.
                    if (c.min() >= 0.0) r.exact_recheck_passed = false;
                    continue;
                }
                ++r.feasible;
                const std::array<double, 3> x{a, b, e};
                if (r.feasible == 1) {
                    r.hull_lo = x;
                    r.hull_hi = x;
                } else {
                    for (int d = 0; d < 3; ++d) {
                        r.hull_lo[d] = std::min(r.hull_lo[d], x[d]);
                        r.hull_hi[d] = std::max(r.hull_hi[d], x[d]);
                    }
                }
                FeasiblePoint fp{exact, c};
                if (c.min() > r.max_margin_value) {
                    r.max_margin_value = c.min();
                    r.max_margin = fp;
                }
                if (keep_points) r.points.push_back(fp);
            }
        }
    }
    return r;
}

/// The grid alpha in [3.9, 4.3], beta in [3.5, 4.2], eps = 1 at step 0.01.
inline FeasibleRegion cp2_default_search(bool keep_points = false) {
    const Rational step(1, 100);
    return cp2_feasible_region({Rational(39, 10), Rational(43, 10), step}, {Rational(35, 10), Rational(42, 10), step},
                               {Rational(1), Rational(1), step}, keep_points);
}

/// The witness (21/5, 4, 1).
inline ProofParameters<Rational> reference_witness() { return {Rational(21, 5), Rational(4), Rational(1)}; }

}  // namespace rfcone::cp2
