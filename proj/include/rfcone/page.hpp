#pragma once

// The Page metric on CP2 # -CP2 through the extremal Kahler metric on the
// trapezium T(a) = {x1 > 0, x2 > 0, a < x1 + x2 < 1}. Every closed form
// below is a rational function of the class parameter a and t = x1 + x2.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "rfcone/conformal.hpp"
#include "rfcone/numerics/errors.hpp"
#include "rfcone/numerics/optimize.hpp"
#include "rfcone/numerics/polynomial.hpp"
#include "rfcone/numerics/roots.hpp"
#include "rfcone/polytope.hpp"
#include "rfcone/toric.hpp"

namespace rfcone::page {

/// V = 150.862 Lambda^-2 for the Page metric (Page's published volume).
inline constexpr double kVolumeCoefficient = 150.862;

/// Torus factor: both circle factors have length 4 pi.
inline constexpr double kTorusVolume = 16.0 * std::numbers::pi * std::numbers::pi;

/// 1 - 6a^2 - 16a^3 + 9a^4; its root in (0, 1/2) is the Einstein class.
inline const Polynomial& critical_quartic() {
    static const Polynomial p{1, 0, -6, -16, 9};
    return p;
}

/// Coefficient of t in the numerator of the conformal scalar curvature.
inline const Polynomial& scal_linear_coefficient() {
    static const Polynomial p{-1, -8, -15, 32, 53, -24, 3};
    return p;
}

/// (a - 1)^3 (1 + 4a + a^2)^3.
inline const Polynomial& scal_denominator() {
    static const Polynomial p = [] {
        Polynomial lin{-1, 1}, quad{1, 4, 1};
        Polynomial l3 = lin * lin * lin, q3 = quad * quad * quad;
        return l3 * q3;
    }();
    return p;
}

/// Numerator coefficients alpha_0..alpha_4 of
/// 6|grad s|^2 - s^3/3 = (sum_i alpha_i t^i) / ((a-1)^3 (1+4a+a^2)^3 t).
inline const std::array<Polynomial, 5>& delta_s2_alphas() {
    static const std::array<Polynomial, 5> alphas{
        Polynomial::monomial(6912, 5),
        Polynomial{72, 0, -648, 3456, 1944, -10368, -1944},
        Polynomial{0, 864, -3456, -15552, 10368, 11232},
        Polynomial{0, 0, 6912, 0, -20736},
        Polynomial::monomial(11520, 3),
    };
    return alphas;
}

namespace detail {

template <class T>
void require_class(const T& a) {
    if (!(a > 0 && a < 1)) throw DomainError("Page class parameter must lie in (0, 1)");
}

inline double as_double(double x) { return x; }
inline double as_double(const Rational& x) { return to_double(x); }

}  // namespace detail

/// f''(t) = 2a(1-a) / (2a t^2 + (1 + 2a - a^2) t + 2a^2) - 1/t on the slab a < t < 1.
template <class T>
T page_fpp(const T& a, const T& t) {
    detail::require_class(a);
    if (!(t > a && t < 1)) throw DomainError("page_fpp: t must lie in (a, 1)");
    const T one(1);
    return 2 * a * (one - a) / (2 * a * t * t + (1 + 2 * a - a * a) * t + 2 * a * a) - one / t;
}

/// f'' as an exact rational function of t for a given class.
inline RationalFunction page_fpp_function(const Rational& a) {
    const Polynomial quad{2 * a * a, 1 + 2 * a - a * a, 2 * a};
    const RationalFunction first(Polynomial::constant(2 * a * (1 - a)), quad);
    const RationalFunction inv_t(Polynomial::constant(1), Polynomial::x());
    return first - inv_t;
}

template <class T>
struct ScalCoefficients {
    T c1;
    T c2;
};

/// s = c1 (x1 + x2) + c2 with c1 = 24a / ((1-a)(1+4a+a^2)) and
/// c2 = 6(1 - 3a^2) / ((1-a)(1+4a+a^2)).
template <class T>
ScalCoefficients<T> page_scal_coeffs(const T& a) {
    detail::require_class(a);
    const T den = (1 - a) * (1 + 4 * a + a * a);
    return {24 * a / den, 6 * (1 - 3 * a * a) / den};
}

/// Scalar curvature of g = s^-2 k on the slice x1 + x2 = t.
template <class T>
T page_conformal_scal(const T& a, const T& t) {
    detail::require_class(a);
    if (!(t > 0)) throw DomainError("page_conformal_scal: t must be positive");
    const T q = critical_quartic()(a);
    const T lin = scal_linear_coefficient()(a);
    const T den = scal_denominator()(a);
    return (864 * a * a * q + 216 * lin * t) / (den * t);
}

/// d kappa / dt; vanishes identically exactly when a is a root of the quartic.
template <class T>
T page_conformal_scal_dt(const T& a, const T& t) {
    detail::require_class(a);
    const T q = critical_quartic()(a);
    return -864 * a * a * q / (scal_denominator()(a) * t * t);
}

/// t-independent part 216 L(a) / Q(a); equals kappa at the critical class.
template <class T>
T page_kappa_constant_part(const T& a) {
    return 216 * scal_linear_coefficient()(a) / scal_denominator()(a);
}

/// The Einstein class: root of the quartic in (0, 1/2).
inline double page_critical_a(double tol = 1e-14) {
    return find_root(critical_quartic(), Interval(0.0, 0.5), tol);
}

/// 6|grad s|^2 - s^3/3 in closed form.
template <class T>
T page_delta_s2_variable_part(const T& a, const T& t) {
    const auto& alphas = delta_s2_alphas();
    T sum(0);
    T power(1);
    for (const auto& alpha : alphas) {
        sum += alpha(a) * power;
        power *= t;
    }
    return sum / (scal_denominator()(a) * t);
}

struct DeltaS2 {
    double value;
    double kappa_used;
    /// Set off the critical class, where kappa is not constant and the
    /// t-averaged kappa stands in for it.
    bool advisory;
};

inline constexpr double kCriticalQuarticTolerance = 1e-9;

/// Mean of kappa(a, t) over t in [a, 1].
inline double page_kappa_average(double a) {
    const double q = critical_quartic()(a);
    const double den = scal_denominator()(a);
    return page_kappa_constant_part(a) + 864.0 * a * a * q / den * std::log(1.0 / a) / (1.0 - a);
}

/// Delta s^2 = kappa/3 + 6|grad s|^2 - s^3/3 on the closed slab t in [a, 1].
inline DeltaS2 page_delta_s2(double a, double t) {
    detail::require_class(a);
    if (!(t >= a && t <= 1.0)) throw DomainError("page_delta_s2: t must lie in [a, 1]");
    const bool critical = std::abs(critical_quartic()(a)) < kCriticalQuarticTolerance;
    const double kappa = critical ? page_kappa_constant_part(a) : page_kappa_average(a);
    return {kappa / 3.0 + page_delta_s2_variable_part(a, t), kappa, !critical};
}

inline DelzantPolygon page_polygon(double a) {
    detail::require_class(a);
    return page_trapezium(a);
}

/// Extremal symplectic potential of the Calabi family on T(a).
inline SymplecticPotential page_potential(double a) {
    return SymplecticPotential(page_polygon(a), page_fpp_function(to_rational(a)));
}

inline AffineFunction page_scal_function(double a) {
    const auto c = page_scal_coeffs(a);
    return {c.c1, c.c1, c.c2};
}

/// (4 pi)^2 int_T s^-4 dx.
inline double page_volume(double a, double tol = 1e-13) {
    const auto s = page_scal_function(a);
    const auto r = integrate_function(page_polygon(a), [&](Point2 x) { return std::pow(s(x), -4.0); }, tol);
    return kTorusVolume * r.value;
}

/// Einstein constant from V = 150.862 Lambda^-2.
inline double page_lambda_from_volume(double volume) { return std::sqrt(kVolumeCoefficient / volume); }

/// Deterministic interior sample points of T(a) at least `clearance` away
/// from every facet.
inline std::vector<Point2> page_sample_points(double a, std::size_t count, double clearance, unsigned seed = 20240607u) {
    const auto poly = page_polygon(a);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    std::vector<Point2> pts;
    while (pts.size() < count) {
        Point2 x{coord(rng), coord(rng)};
        bool ok = true;
        for (const auto& f : poly.facets()) ok = ok && f(x) > clearance * f.normal_length();
        if (ok) pts.push_back(x);
    }
    return pts;
}

/// kappa assembled pointwise as s^3 + 6 s Delta s - 12 |grad s|^2 with the
/// Laplacian by finite differences of the toric metric.
inline double page_kappa_from_identity(const SymplecticPotential& u, const AffineFunction& s, Point2 x, double h = 1e-4) {
    return conformal_scal_identity(s(x), laplacian_affine(u, s, x, h), gradient_norm_squared(u, s, x));
}

struct PageOptions {
    double root_tol = 1e-14;
    double maximize_tol = 1e-12;
    std::size_t samples = 10000;
    double volume_tol = 1e-13;
    std::size_t identity_points = 10;
    double fd_step = 1e-4;
};

struct PageAnalysis {
    double a_star;
    double c1;
    double c2;
    double kappa;
    double K;
    double K_argmax;
    double ratio;
    double volume;
    double lambda_einstein;
    double kappa_from_volume;
    double kappa_identity_mean;
    double kappa_identity_max_dev;
    AffineScalarCurvature solver_scal;
    bool cone_unstable;
    bool shrinker_unstable;
};

/// Critical class, scalar curvature, sup Delta s^2, volume and the
/// normalized instability ratio 12 K / kappa.
inline PageAnalysis page_full_analysis(const PageOptions& opt = {}) {
    PageAnalysis r{};
    r.a_star = page_critical_a(opt.root_tol);
    const auto c = page_scal_coeffs(r.a_star);
    r.c1 = c.c1;
    r.c2 = c.c2;
    r.kappa = page_conformal_scal(r.a_star, 0.5 * (1.0 + r.a_star));

    const auto m = maximize_1d([&](double t) { return page_delta_s2(r.a_star, t).value; }, Interval(r.a_star, 1.0),
                               opt.maximize_tol, MaximizeOptions{opt.samples});
    r.K = m.value;
    r.K_argmax = m.argmax;
    const auto ns = normalized_sup(r.kappa, r.K);
    r.ratio = ns.ratio;
    r.cone_unstable = ns.cone_unstable;
    r.shrinker_unstable = ns.shrinker_unstable;

    r.volume = page_volume(r.a_star, opt.volume_tol);
    r.lambda_einstein = page_lambda_from_volume(r.volume);
    r.kappa_from_volume = 4.0 * r.lambda_einstein;

    const auto u = page_potential(r.a_star);
    const auto s = page_scal_function(r.a_star);
    double sum = 0.0, max_dev = 0.0;
    const auto pts = page_sample_points(r.a_star, opt.identity_points, 0.02);
    for (const auto& x : pts) {
        const double k = page_kappa_from_identity(u, s, x, opt.fd_step);
        sum += k;
        max_dev = std::max(max_dev, std::abs(k - r.kappa));
    }
    r.kappa_identity_mean = sum / static_cast<double>(pts.size());
    r.kappa_identity_max_dev = max_dev;

    r.solver_scal = extremal_affine_coefficients(page_polygon(r.a_star));
    return r;
}

}  // namespace rfcone::page
