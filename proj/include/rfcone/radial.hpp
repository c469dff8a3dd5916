#pragma once

// Reduced radial stability theory on Ricci-flat cones of dimension n. A
// variation f(r) r^2 h with h an eigen-tensor on the link reduces the
// stability inequality to the sign of
//
//   Q(f) = int_0^inf (f'^2 - lambda f^2 / r^2) r^(n-1) dr,
//
// which can be made negative iff lambda > (n-2)^2 / 4 (sharp Hardy bound).
// Substituting r = e^s, f = r^(-(n-2)/2) g(s) turns Q into
// int (g'^2 + ((n-2)^2/4 - lambda) g^2) ds.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rfcone/conformal.hpp"
#include "rfcone/numerics/errors.hpp"
#include "rfcone/numerics/polynomial.hpp"

namespace rfcone::radial {

struct ConeSpec {
    int n;
    double lambda;

    ConeSpec(int n_, double lambda_) : n(n_), lambda(lambda_) {
        if (n < 3) throw std::invalid_argument("cone dimension must be at least 3");
        if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be non-negative");
    }

    double hardy_exponent() const { return 0.5 * (n - 2); }
    /// (n-2)^2 / 4, the largest lambda for which Q stays non-negative.
    double threshold() const { return 0.25 * (n - 2) * (n - 2); }
};

/// Optimal constant in int f^2/r^2 r^(n-1) dr <= C_H int f'^2 r^(n-1) dr.
inline double hardy_constant(int n) {
    if (n < 3) throw std::invalid_argument("hardy_constant requires n >= 3");
    return 4.0 / ((n - 2.0) * (n - 2.0));
}

/// Radial profile sampled on a strictly increasing positive grid.
struct RadialProfile {
    std::vector<double> r;
    std::vector<double> f;

    RadialProfile(std::vector<double> grid, std::vector<double> values) : r(std::move(grid)), f(std::move(values)) {
        if (r.size() != f.size()) throw std::invalid_argument("grid and values differ in length");
        if (r.size() < 3) throw std::invalid_argument("profile needs at least 3 nodes");
        if (!(r.front() > 0.0)) throw std::invalid_argument("radii must be positive");
        for (std::size_t k = 1; k < r.size(); ++k)
            if (!(r[k] > r[k - 1])) throw std::invalid_argument("radii must be strictly increasing");
        if (r.back() / r.front() < 1e3) throw std::invalid_argument("grid must span at least 3 decades");
    }

    bool compact_support() const { return f.front() == 0.0 && f.back() == 0.0; }
    std::size_t size() const { return r.size(); }
};

/// Logarithmic grid; defaults r in [1e-3, 1e3] with 4096 nodes.
inline std::vector<double> log_grid(double r_min = 1e-3, double r_max = 1e3, std::size_t nodes = 4096) {
    if (!(r_min > 0.0 && r_max > r_min) || nodes < 3) throw std::invalid_argument("invalid log grid");
    std::vector<double> r(nodes);
    const double s0 = std::log(r_min), s1 = std::log(r_max);
    for (std::size_t k = 0; k < nodes; ++k)
        r[k] = std::exp(s0 + (s1 - s0) * static_cast<double>(k) / static_cast<double>(nodes - 1));
    r.front() = r_min;
    r.back() = r_max;
    return r;
}

/// Profile of f with the end nodes forced to zero.
template <class F>
RadialProfile sample_profile(F&& f, std::vector<double> grid) {
    std::vector<double> v(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) v[k] = f(grid[k]);
    v.front() = 0.0;
    v.back() = 0.0;
    return RadialProfile(std::move(grid), std::move(v));
}

/// Q(f) on the profile's grid, discretized in s = log r:
///   sum_cells ((f_{k+1}-f_k)/h_k)^2 e^{(n-2) s_{k+1/2}} h_k
///   - lambda sum_nodes f_k^2 e^{(n-2) s_k} w_k      (trapezoid weights w_k).
inline double radial_form(const ConeSpec& spec, const RadialProfile& p) {
    const double e = spec.n - 2.0;
    const std::size_t n = p.size();
    std::vector<double> s(n);
    for (std::size_t k = 0; k < n; ++k) s[k] = std::log(p.r[k]);
    double gradient = 0.0, mass = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double h = s[k + 1] - s[k];
        const double scaled = (p.f[k + 1] - p.f[k]) * std::exp(0.25 * e * (s[k] + s[k + 1]));
        gradient += scaled * scaled / h;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double w = 0.5 * ((k > 0 ? s[k] - s[k - 1] : 0.0) + (k + 1 < n ? s[k + 1] - s[k] : 0.0));
        const double scaled = p.f[k] * std::exp(0.5 * e * s[k]);
        mass += scaled * scaled * w;
    }
    return gradient - spec.lambda * mass;
}

/// Profile of r -> f(c r): same values on the grid divided by c.
inline RadialProfile rescaled(const RadialProfile& p, double c) {
    std::vector<double> grid(p.r);
    for (auto& x : grid) x /= c;
    return RadialProfile(std::move(grid), p.f);
}

/// Smallest eigenvalue of the discrete form relative to its lambda-mass
/// (Dirichlet at both ends): min over grid profiles of
/// (Q(f) + lambda M(f)) / M(f) - lambda. Non-negative iff Q >= 0 on the grid.
/// Computed by Sturm-sequence bisection on the symmetrized tridiagonal matrix.
inline double min_form_eigenvalue(const ConeSpec& spec, const std::vector<double>& grid, double tol = 1e-12) {
    const std::size_t n = grid.size();
    if (n < 3) throw std::invalid_argument("grid too small");
    const double e = spec.n - 2.0;
    std::vector<double> s(n);
    for (std::size_t k = 0; k < n; ++k) s[k] = std::log(grid[k]);
    // Symmetrized with the lambda-mass m_k = e^{(n-2) s_k} w_k so that entries
    // stay O(1/h^2) however large the radii are:
    //   B_kk     = (e^{-(n-2) h_{k-1}/2} / h_{k-1} + e^{(n-2) h_k/2} / h_k) / w_k - lambda
    //   B_k,k+1  = -1 / (h_k sqrt(w_k w_{k+1}))
    const std::size_t m = n - 2;
    std::vector<double> diag(m), off(m > 0 ? m - 1 : 0);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t k = i + 1;
        const double hl = s[k] - s[k - 1], hr = s[k + 1] - s[k];
        const double w = 0.5 * (hl + hr);
        diag[i] = (std::exp(-0.5 * e * hl) / hl + std::exp(0.5 * e * hr) / hr) / w - spec.lambda;
        if (i + 1 < m) {
            const double wn = 0.5 * (hr + (s[k + 2] - s[k + 1]));
            off[i] = -1.0 / (hr * std::sqrt(w * wn));
        }
    }

    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = 0; i < m; ++i) {
        const double radius = (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i + 1 < m ? std::abs(off[i]) : 0.0);
        lo = std::min(lo, diag[i] - radius);
        hi = std::max(hi, diag[i] + radius);
    }
    auto count_below = [&](double x) {
        std::size_t negatives = 0;
        double d = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double coupling = i > 0 ? off[i - 1] * off[i - 1] / d : 0.0;
            d = diag[i] - x - coupling;
            if (d == 0.0) d = -std::numeric_limits<double>::min();
            if (d < 0.0) ++negatives;
        }
        return negatives;
    };
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (count_below(mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

struct WitnessOptions {
    /// Witnesses are built only when lambda exceeds the threshold by more than this.
    double margin = 1e-6;
    /// Allowed shift of the discrete threshold, as a fraction of the excess;
    /// smaller values give finer grids.
    double resolution = 0.05;
    std::size_t max_nodes = 8'000'000;
};

class WitnessRangeError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// f = r^{-(n-2)/2} g(log r) with g a plateau of length `plateau` joined to
/// zero by sin^2 ramps of width `ramp`, centered at s = 0.
struct RadialWitness {
    ConeSpec spec;
    double plateau;
    double ramp;
    double step;
    RadialProfile profile;
    double form;

    double g(double s) const {
        const double half = 0.5 * plateau;
        const double x = std::abs(s);
        if (x <= half) return 1.0;
        if (x >= half + ramp) return 0.0;
        const double c = std::cos(0.5 * std::numbers::pi * (x - half) / ramp);
        return c * c;
    }

    double operator()(double r) const {
        const double s = std::log(r);
        return std::exp(-spec.hardy_exponent() * s) * g(s);
    }

    /// Support plus one padding cell each side, widened to the minimum
    /// three-decade grid.
    double half_span() const { return std::max(0.5 * plateau + ramp + step, kMinHalfSpan); }

    static constexpr double kMinHalfSpan = 3.5;

    /// The same witness sampled with `nodes` uniform cells in log r.
    RadialProfile sample(std::size_t nodes) const {
        const double S = half_span();
        return sample_profile(*this, log_grid(std::exp(-S), std::exp(S), nodes));
    }
};

/// A compactly supported profile with radial_form < 0, or nullopt when
/// lambda <= (n-2)^2/4 + margin.
inline std::optional<RadialWitness> instability_witness(const ConeSpec& spec, WitnessOptions opt = {}) {
    const double excess = spec.lambda - spec.threshold();
    if (!(excess > opt.margin)) return std::nullopt;
    const double m = spec.hardy_exponent();

    // Ramp cost pi^2/(4 w) against bulk gain excess * (L + w); with L = w the
    // ratio is pi^2 / (8 excess w^2) = pi^2/32 < 1 at w = 2/sqrt(excess).
    const double ramp = 2.0 / std::sqrt(excess);
    const double plateau = ramp;
    // Discrete threshold 4 sinh^2(m h/2)/h^2 ~ m^2 + m^4 h^2/12 stays within
    // resolution * excess of the continuous one.
    double step = std::min(0.05 * ramp, 0.05);
    if (m > 0.0) step = std::min(step, std::sqrt(12.0 * opt.resolution * excess) / (m * m));
    const double half_span = std::max(0.5 * plateau + ramp + step, RadialWitness::kMinHalfSpan);
    if (m * half_span > 600.0)
        throw WitnessRangeError("witness for lambda - threshold = " + std::to_string(excess) +
                                " needs radii beyond double range");
    const auto nodes = static_cast<std::size_t>(std::ceil(2.0 * half_span / step)) + 1;
    if (nodes > opt.max_nodes) throw WitnessRangeError("witness grid exceeds max_nodes");

    RadialWitness w{spec, plateau, ramp, step, RadialProfile({1.0, 1e2, 1e4}, {0.0, 0.0, 0.0}), 0.0};
    w.profile = w.sample(nodes);
    w.form = radial_form(spec, w.profile);
    if (!(w.form < 0.0)) throw NumericalError("witness construction failed to produce a negative form");
    return w;
}

enum class Verdict { unstable, undecided };

inline const char* to_string(Verdict v) { return v == Verdict::unstable ? "unstable" : "undecided"; }

struct ProductConeVerdict {
    int n1;
    int n2;
    int n;
    double prefactor;           // 1/n1 + 1/n2
    double reduction_residual;  // |lhs - rhs| of the zeroth-order reduction
    bool reduction_exact;       // same identity in rational arithmetic
    double lambda;              // 2(n-2)
    Verdict verdict;
    std::optional<RadialWitness> witness;
};

/// Zeroth-order terms of |grad h|^2 - 2 Rm(h,h) for h = f r^2 (g1/n1 - g2/n2):
///   2 (n2/n1 + 2 + n1/n2) - 2 (1/n1 + 1/n2) = (1/n1 + 1/n2) 2 (n - 2).
template <class T>
T product_reduction_lhs(const T& n1, const T& n2) {
    return 2 * (n2 / n1 + 2 + n1 / n2) - 2 * (1 / n1 + 1 / n2);
}

template <class T>
T product_reduction_rhs(const T& n1, const T& n2) {
    return (1 / n1 + 1 / n2) * 2 * (n1 + n2 + 1 - 2);
}

/// Cone over a product of Einstein manifolds of dimensions n1, n2.
inline ProductConeVerdict product_cone_test(int n1, int n2, WitnessOptions opt = {}) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("factor dimensions must be positive");
    ProductConeVerdict v{};
    v.n1 = n1;
    v.n2 = n2;
    v.n = n1 + n2 + 1;
    v.prefactor = 1.0 / n1 + 1.0 / n2;
    const double d1 = n1, d2 = n2;
    double residual = 0.0;
    for (double f2_over_r2 : {0.1, 1.0, 7.5}) {
        const double lhs = product_reduction_lhs(d1, d2) * f2_over_r2;
        const double rhs = product_reduction_rhs(d1, d2) * f2_over_r2;
        residual = std::max(residual, std::abs(lhs - rhs));
    }
    v.reduction_residual = residual;
    const Rational q1(n1), q2(n2);
    v.reduction_exact = product_reduction_lhs(q1, q2) == product_reduction_rhs(q1, q2);
    v.lambda = 2.0 * (v.n - 2);
    v.witness = instability_witness(ConeSpec(v.n, v.lambda), opt);
    v.verdict = v.witness ? Verdict::unstable : Verdict::undecided;
    return v;
}

struct KeConeVerdict {
    int n;
    int h11;
    double lambda;
    Verdict verdict;
    std::optional<RadialWitness> witness;
};

/// Cone over a Kahler-Einstein base with h^{1,1} > 1: a traceless harmonic
/// (1,1)-form gives an eigen-tensor with eigenvalue 2(n-2).
inline KeConeVerdict ke_cone_test(int n, int h11, WitnessOptions opt = {}) {
    if (n < 3) throw std::invalid_argument("cone dimension must be at least 3");
    if (h11 < 1) throw std::invalid_argument("h11 must be at least 1");
    KeConeVerdict v{n, h11, 2.0 * (n - 2), Verdict::undecided, std::nullopt};
    if (h11 > 1) v.witness = instability_witness(ConeSpec(n, v.lambda), opt);
    if (v.witness) v.verdict = Verdict::unstable;
    return v;
}

struct GapLemmaVerdict {
    double gap;
    double lambda;  // used for the n = 5 witness, strictly above 9/4
    Verdict verdict;
    std::optional<RadialWitness> witness;
};

/// Cones over four-manifolds: a TT tensor with
/// int(-|grad h|^2 + 2 Rm(h,h) - 9/4 |h|^2) > 0 makes the cone unstable.
/// `gap` is that integral per unit int |h|^2; the witness uses
/// lambda = 9/4 + gap/2.
inline GapLemmaVerdict gap_lemma_test(double gap, WitnessOptions opt = {}) {
    GapLemmaVerdict v{gap, kFourManifoldGap, Verdict::undecided, std::nullopt};
    if (!(gap > 0.0)) return v;
    v.verdict = Verdict::unstable;
    v.lambda = kFourManifoldGap + 0.5 * gap;
    try {
        v.witness = instability_witness(ConeSpec(5, v.lambda), opt);
    } catch (const WitnessRangeError&) {
        // Gap too small to realize on a double-precision grid; the verdict
        // still follows from the lemma.
    }
    return v;
}

inline void write_csv(std::ostream& os, const RadialProfile& p) {
    os << "r,f\n";
    os.precision(12);
    for (std::size_t k = 0; k < p.size(); ++k) os << p.r[k] << ',' << p.f[k] << '\n';
}

}  // namespace rfcone::radial
