#pragma once

// The Chen-LeBrun-Weber metric on CP2 # 2(-CP2) via the extremal Kahler
// metric on the pentagon with vertices (0,0), (a,0), (a,1), (1,a), (0,a).

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rfcone/conformal.hpp"
#include "rfcone/numerics/errors.hpp"
#include "rfcone/polytope.hpp"
#include "rfcone/toric.hpp"

namespace rfcone::clw {

class DegeneratePolytope : public PolytopeError {
public:
    using PolytopeError::PolytopeError;
};

class NegativeDiscriminant : public NumericalError {
public:
    using NumericalError::NumericalError;
};

inline constexpr double kDefaultClass = 1.958;
/// The anticanonical class, where the balanced-metric bound was computed.
inline constexpr double kAnticanonicalClass = 2.0;
/// External bound on sup Delta s^2 from balanced metrics at a = 2.
inline constexpr double kDefaultKBound = 1.363;

struct TopologyData {
    int euler;
    int signature;
};

/// CP2 # 2(-CP2): each blow-up adds one to chi (3 + 2) and subtracts one
/// from sigma (1 - 2).
inline constexpr TopologyData kTopology{5, -1};

struct PentagonIntegrals {
    double A;   // int x1^2 = int x2^2
    double B;   // int x1 x2
    double C;   // int x1 = int x2
    double D;   // area
    double E0;  // int_dP dsigma
    double E1;  // int_dP x1 dsigma = int_dP x2 dsigma
};

struct ClwIntegrals {
    PentagonIntegrals closed_form;
    PentagonIntegrals triangulated;
    double max_relative_difference;
};

inline void require_class(double a) {
    if (!(a > 1.0)) throw DegeneratePolytope("CLW pentagon requires a > 1");
}

inline DelzantPolygon clw_polygon(double a) {
    require_class(a);
    return clw_pentagon(a);
}

inline PentagonIntegrals clw_closed_form_integrals(double a) {
    const double a2 = a * a, a3 = a2 * a, a4 = a3 * a;
    return {(a4 + 4.0 * a3 - 1.0) / 12.0,
            (a4 + 4.0 * a3 + 6.0 * a2 - 4.0 * a - 1.0) / 24.0,
            (a3 + 3.0 * a2 - 1.0) / 6.0,
            (a2 + 2.0 * a - 1.0) / 2.0,
            1.0 + 3.0 * a,
            a2 + a};
}

/// Closed forms next to the exact triangulated integrals of the polytope module.
inline ClwIntegrals clw_integrals(double a) {
    require_class(a);
    const auto p = clw_polygon(a);
    ClwIntegrals r{};
    r.closed_form = clw_closed_form_integrals(a);
    r.triangulated = {integrate_monomial(p, 2, 0),
                      integrate_monomial(p, 1, 1),
                      integrate_monomial(p, 1, 0),
                      integrate_monomial(p, 0, 0),
                      boundary_measure_integral(p, {0.0, 0.0, 1.0}),
                      boundary_measure_integral(p, {1.0, 0.0, 0.0})};
    auto rel = [](double x, double y) { return std::abs(x - y) / std::max(std::abs(x), std::abs(y)); };
    const auto& c = r.closed_form;
    const auto& t = r.triangulated;
    r.max_relative_difference =
        std::max({rel(c.A, t.A), rel(c.B, t.B), rel(c.C, t.C), rel(c.D, t.D), rel(c.E0, t.E0), rel(c.E1, t.E1)});
    return r;
}

/// Extremal affine scalar curvature on the pentagon from the symmetric 3x3
/// system [[A,B,C],[B,A,C],[C,C,D]] (a1,a2,b) = (E1,E1,E0).
inline AffineScalarCurvature clw_scal(double a) {
    require_class(a);
    const auto in = clw_closed_form_integrals(a);
    const Matrix3 m{{{in.A, in.B, in.C}, {in.B, in.A, in.C}, {in.C, in.C, in.D}}};
    const auto sol = solve_linear_3(m, {in.E1, in.E1, in.E0});
    AffineScalarCurvature s;
    s.a1 = sol.x[0];
    s.a2 = sol.x[1];
    s.b = sol.x[2];
    const auto r = ibp_residuals(clw_polygon(a), s);
    s.residual = std::max({r[0], r[1], r[2]});
    return s;
}

struct EinsteinNormalization {
    double lambda;
    double kappa;
    double int_s2;       // int_P s^2 dx
    double int_s_inv4;   // int_P s^-4 dx
    double volume;       // 16 pi^2 int_P s^-4 dx
    double min_vertex_scal;
};

/// Einstein constant of g = s^-2 k from Gauss-Bonnet and Hirzebruch:
/// Lambda^2 = (96 pi^2 chi + 144 pi^2 sigma - int s^2 dV) / (8 Vol_g), with
/// dV = 16 pi^2 dx on P x T^2 for both integrals.
inline EinsteinNormalization einstein_normalization(const DelzantPolygon& p, const AffineFunction& s,
                                                    TopologyData topology, double tol = 1e-13) {
    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    constexpr double torus = 16.0 * pi2;
    EinsteinNormalization r{};
    r.min_vertex_scal = s(p.vertices().front());
    for (const auto& v : p.vertices()) r.min_vertex_scal = std::min(r.min_vertex_scal, s(v));
    if (!(r.min_vertex_scal > 0.0)) throw DomainError("scalar curvature must be positive on the polygon");

    // s^2 is a quadratic polynomial, so its integral is exact.
    r.int_s2 = integrate_polynomial(p, {{{2, 0, s.a1 * s.a1},
                                         {0, 2, s.a2 * s.a2},
                                         {1, 1, 2.0 * s.a1 * s.a2},
                                         {1, 0, 2.0 * s.a1 * s.b},
                                         {0, 1, 2.0 * s.a2 * s.b},
                                         {0, 0, s.b * s.b}}});
    r.int_s_inv4 = integrate_function(p, [&](Point2 x) { return std::pow(s(x), -4.0); }, tol).value;
    r.volume = torus * r.int_s_inv4;
    const double numerator = 96.0 * pi2 * topology.euler + 144.0 * pi2 * topology.signature - torus * r.int_s2;
    if (!(numerator > 0.0)) throw NegativeDiscriminant("Gauss-Bonnet numerator is not positive");
    r.lambda = std::sqrt(numerator / (8.0 * r.volume));
    r.kappa = 4.0 * r.lambda;
    return r;
}

inline EinsteinNormalization clw_einstein_constant(double a) {
    return einstein_normalization(clw_polygon(a), clw_scal(a), kTopology);
}

/// 12 K / kappa with K an externally supplied bound on sup Delta s^2.
inline double clw_instability_ratio(double K_input, double kappa) { return normalized_sup(kappa, K_input).ratio; }

struct ClwAnalysis {
    double a;
    ClwIntegrals integrals;
    AffineScalarCurvature scal;
    EinsteinNormalization einstein;
    double lambda_einstein;
    double kappa;
    double K_input;
    double ratio;
    bool cone_unstable;      // conditional on K_input
    bool shrinker_unstable;  // conditional on K_input
};

inline ClwAnalysis clw_full_analysis(double a = kDefaultClass, double K_input = kDefaultKBound) {
    ClwAnalysis r{};
    r.a = a;
    r.integrals = clw_integrals(a);
    r.scal = clw_scal(a);
    r.einstein = einstein_normalization(clw_polygon(a), r.scal, kTopology);
    r.lambda_einstein = r.einstein.lambda;
    r.kappa = r.einstein.kappa;
    r.K_input = K_input;
    const auto ns = normalized_sup(r.kappa, K_input);
    r.ratio = ns.ratio;
    r.cone_unstable = ns.cone_unstable;
    r.shrinker_unstable = ns.shrinker_unstable;
    return r;
}

}  // namespace rfcone::clw
