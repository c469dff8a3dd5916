#pragma once

// Toric Kahler metrics in symplectic coordinates. The metric on P x T^2 is
// u_ij dx^i dx^j + u^ij dtheta^i dtheta^j, with u the symplectic potential.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "rfcone/numerics/errors.hpp"
#include "rfcone/numerics/linear.hpp"
#include "rfcone/numerics/polynomial.hpp"
#include "rfcone/polytope.hpp"

namespace rfcone {

class BoundaryPoint : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Symmetric 2x2 matrix [[m11, m12], [m12, m22]].
struct Sym2 {
    double m11 = 0.0;
    double m12 = 0.0;
    double m22 = 0.0;

    double det() const { return m11 * m22 - m12 * m12; }
    double trace() const { return m11 + m22; }
    Sym2 inverse() const {
        const double d = det();
        return {m22 / d, -m12 / d, m11 / d};
    }
    bool positive_definite() const { return m11 > 0.0 && det() > 0.0; }
    double quadratic(double v1, double v2) const { return m11 * v1 * v1 + 2.0 * m12 * v1 * v2 + m22 * v2 * v2; }
    double entry_sum() const { return m11 + 2.0 * m12 + m22; }
};

/// u(x) = sum_i l_i(x) log l_i(x) + f(x1 + x2), stored through f''.
class SymplecticPotential {
public:
    SymplecticPotential(DelzantPolygon polygon, RationalFunction aux_fpp)
        : polygon_(std::move(polygon)), aux_fpp_(std::move(aux_fpp)) {}

    /// Pure Guillemin potential (f'' = 0).
    static SymplecticPotential guillemin(DelzantPolygon polygon) {
        return SymplecticPotential(std::move(polygon), RationalFunction());
    }

    const DelzantPolygon& polygon() const noexcept { return polygon_; }
    const RationalFunction& aux_fpp() const noexcept { return aux_fpp_; }

    /// The auxiliary function depends on x1 + x2 only.
    static constexpr std::array<int, 2> aux_direction{1, 1};

private:
    DelzantPolygon polygon_;
    RationalFunction aux_fpp_;
};

/// AffineFunction plus the integration-by-parts residual of the solve that
/// produced it.
struct AffineScalarCurvature : AffineFunction {
    double residual = 0.0;
};

inline constexpr double kBoundaryTolerance = 1e-12;

/// u_ij = sum_i nu_i nu_i^T / l_i(x) + f''(x1 + x2) [[1,1],[1,1]].
inline Sym2 metric_hessian(const SymplecticPotential& u, Point2 x) {
    Sym2 h{};
    for (const auto& f : u.polygon().facets()) {
        const double l = f(x);
        if (!(l > kBoundaryTolerance)) throw BoundaryPoint("metric_hessian: point on or outside the boundary");
        const double n1 = f.normal[0], n2 = f.normal[1];
        h.m11 += n1 * n1 / l;
        h.m12 += n1 * n2 / l;
        h.m22 += n2 * n2 / l;
    }
    const double fpp = u.aux_fpp()(x.x1 + x.x2);
    h.m11 += fpp;
    h.m12 += fpp;
    h.m22 += fpp;
    return h;
}

/// u^ij, the inverse of the Hessian.
inline Sym2 inverse_metric(const SymplecticPotential& u, Point2 x) { return metric_hessian(u, x).inverse(); }

namespace detail {

inline void require_clearance(const SymplecticPotential& u, Point2 x, double clearance, const char* who) {
    for (const auto& f : u.polygon().facets())
        if (!(f(x) > clearance * f.normal_length()))
            throw BoundaryPoint(std::string(who) + ": stencil reaches the boundary");
}

}  // namespace detail

/// Abreu's scalar curvature S = -sum_ij d^2 u^ij / dx_i dx_j from central
/// second differences of the closed-form u^ij with spacing h.
inline double abreu_scalar_curvature(const SymplecticPotential& u, Point2 x, double h = 1e-3) {
    detail::require_clearance(u, x, 2.0 * h, "abreu_scalar_curvature");
    auto at = [&](double d1, double d2) { return inverse_metric(u, {x.x1 + d1 * h, x.x2 + d2 * h}); };
    const Sym2 c = at(0, 0);
    const double d11 = (at(1, 0).m11 - 2.0 * c.m11 + at(-1, 0).m11) / (h * h);
    const double d22 = (at(0, 1).m22 - 2.0 * c.m22 + at(0, -1).m22) / (h * h);
    const double d12 = (at(1, 1).m12 - at(1, -1).m12 - at(-1, 1).m12 + at(-1, -1).m12) / (4.0 * h * h);
    return -(d11 + 2.0 * d12 + d22);
}

/// Richardson combination (4 S(h/2) - S(h)) / 3, removing the h^2 term.
inline double abreu_scalar_curvature_extrapolated(const SymplecticPotential& u, Point2 x, double h = 1e-3) {
    const double coarse = abreu_scalar_curvature(u, x, h);
    const double fine = abreu_scalar_curvature(u, x, 0.5 * h);
    return (4.0 * fine - coarse) / 3.0;
}

/// |grad s|^2 = u^ij d_i s d_j s.
inline double gradient_norm_squared(const SymplecticPotential& u, const AffineFunction& s, Point2 x) {
    return inverse_metric(u, x).quadratic(s.a1, s.a2);
}

/// Laplacian of an affine function: d_i (u^ij d_j s), central differences.
/// The toric volume form is dx dtheta, so no density factor appears.
inline double laplacian_affine(const SymplecticPotential& u, const AffineFunction& s, Point2 x, double h = 1e-4) {
    detail::require_clearance(u, x, 2.0 * h, "laplacian_affine");
    auto flux = [&](Point2 p, int component) {
        const Sym2 inv = inverse_metric(u, p);
        return component == 0 ? inv.m11 * s.a1 + inv.m12 * s.a2 : inv.m12 * s.a1 + inv.m22 * s.a2;
    };
    const double d1 = (flux({x.x1 + h, x.x2}, 0) - flux({x.x1 - h, x.x2}, 0)) / (2.0 * h);
    const double d2 = (flux({x.x1, x.x2 + h}, 1) - flux({x.x1, x.x2 - h}, 1)) / (2.0 * h);
    return d1 + d2;
}

/// Polytope and boundary integrals entering the extremal-coefficient system.
struct DonaldsonSystem {
    double int_x1_sq;   // A (x1 component)
    double int_x2_sq;
    double int_x1x2;    // B
    double int_x1;      // C (x1 component)
    double int_x2;
    double area;        // D
    double boundary_1;  // E0
    double boundary_x1; // E1
    double boundary_x2; // E2
};

inline DonaldsonSystem donaldson_system(const DelzantPolygon& p) {
    return {integrate_monomial(p, 2, 0),
            integrate_monomial(p, 0, 2),
            integrate_monomial(p, 1, 1),
            integrate_monomial(p, 1, 0),
            integrate_monomial(p, 0, 1),
            integrate_monomial(p, 0, 0),
            boundary_measure_integral(p, {0.0, 0.0, 1.0}),
            boundary_measure_integral(p, {1.0, 0.0, 0.0}),
            boundary_measure_integral(p, {0.0, 1.0, 0.0})};
}

/// |int_dP f dsigma - int_P s f dx| for f = 1, x1, x2 (in that order).
inline std::array<double, 3> ibp_residuals(const DelzantPolygon& p, const AffineFunction& s) {
    const auto sys = donaldson_system(p);
    const double r1 = sys.boundary_1 - (s.a1 * sys.int_x1 + s.a2 * sys.int_x2 + s.b * sys.area);
    const double rx1 = sys.boundary_x1 - (s.a1 * sys.int_x1_sq + s.a2 * sys.int_x1x2 + s.b * sys.int_x1);
    const double rx2 = sys.boundary_x2 - (s.a1 * sys.int_x1x2 + s.a2 * sys.int_x2_sq + s.b * sys.int_x2);
    return {std::abs(r1), std::abs(rx1), std::abs(rx2)};
}

/// The affine scalar curvature of any extremal toric metric on P. For affine
/// test functions f the left side of Donaldson's integration by parts
/// formula vanishes, leaving int_P s f dx = int_dP f dsigma for f = x1, x2, 1.
inline AffineScalarCurvature extremal_affine_coefficients(const DelzantPolygon& p) {
    const auto sys = donaldson_system(p);
    const Matrix3 m{{{sys.int_x1_sq, sys.int_x1x2, sys.int_x1},
                     {sys.int_x1x2, sys.int_x2_sq, sys.int_x2},
                     {sys.int_x1, sys.int_x2, sys.area}}};
    const Vector3 rhs{sys.boundary_x1, sys.boundary_x2, sys.boundary_1};
    const auto sol = solve_linear_3(m, rhs);
    AffineScalarCurvature s;
    s.a1 = sol.x[0];
    s.a2 = sol.x[1];
    s.b = sol.x[2];
    const auto r = ibp_residuals(p, s);
    s.residual = std::max({r[0], r[1], r[2]});
    return s;
}

}  // namespace rfcone
