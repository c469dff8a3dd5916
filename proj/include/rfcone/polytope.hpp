#pragma once

// Delzant polygons in the plane. A polygon is the closure of
// {x : l_i(x) = <nu_i, x> + c_i > 0 for all i} with integer normals nu_i.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <istream>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rfcone/numerics/errors.hpp"
#include "rfcone/numerics/quadrature.hpp"

namespace rfcone {

struct Point2 {
    double x1 = 0.0;
    double x2 = 0.0;

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
    friend Point2 operator*(double s, Point2 a) { return {s * a.x1, s * a.x2}; }
    friend bool operator==(const Point2&, const Point2&) = default;
};

inline double cross(Point2 a, Point2 b) { return a.x1 * b.x2 - a.x2 * b.x1; }
inline double norm(Point2 a) { return std::hypot(a.x1, a.x2); }

class PolytopeError : public NumericalError {
public:
    using NumericalError::NumericalError;
};
class EmptyInterior : public PolytopeError {
public:
    using PolytopeError::PolytopeError;
};
class Unbounded : public PolytopeError {
public:
    using PolytopeError::PolytopeError;
};

/// l(x) = <normal, x> + offset.
struct Facet {
    std::array<int, 2> normal;
    double offset;

    double operator()(Point2 x) const { return normal[0] * x.x1 + normal[1] * x.x2 + offset; }
    double normal_length() const { return std::hypot(normal[0], normal[1]); }
    bool is_primitive() const { return std::gcd(std::abs(normal[0]), std::abs(normal[1])) == 1; }
};

/// Affine function b + a1 x1 + a2 x2.
struct AffineFunction {
    double a1 = 0.0;
    double a2 = 0.0;
    double b = 0.0;

    double operator()(Point2 x) const { return a1 * x.x1 + a2 * x.x2 + b; }
};

struct MonomialTerm {
    int i;
    int j;
    double coefficient;
};

/// Finite sum of coefficient * x1^i * x2^j.
struct BivariatePolynomial {
    std::vector<MonomialTerm> terms;

    double operator()(Point2 x) const {
        double sum = 0.0;
        for (const auto& t : terms) sum += t.coefficient * std::pow(x.x1, t.i) * std::pow(x.x2, t.j);
        return sum;
    }
};

class DelzantPolygon;
DelzantPolygon polygon_from_facets(std::vector<Facet> facets);

class DelzantPolygon {
public:
    const std::vector<Facet>& facets() const noexcept { return facets_; }
    /// Counterclockwise, starting from the lowest (then leftmost) vertex.
    const std::vector<Point2>& vertices() const noexcept { return vertices_; }
    /// Indices into vertices() of the two endpoints of each facet's edge.
    const std::vector<std::array<std::size_t, 2>>& facet_edges() const noexcept { return edges_; }
    /// Primitive normals and unimodular normal pairs at every vertex.
    bool is_delzant() const noexcept { return delzant_; }

    double area() const {
        double twice = 0.0;
        for (std::size_t k = 0; k < vertices_.size(); ++k)
            twice += cross(vertices_[k], vertices_[(k + 1) % vertices_.size()]);
        return 0.5 * twice;
    }

    /// Mean of the vertices; an interior point of the convex polygon.
    Point2 vertex_center() const {
        Point2 c{};
        for (const auto& v : vertices_) c = c + v;
        return (1.0 / static_cast<double>(vertices_.size())) * c;
    }

    double min_facet_value(Point2 x) const {
        double m = facets_.front()(x);
        for (const auto& f : facets_) m = std::min(m, f(x));
        return m;
    }

    bool contains(Point2 x, double tol = 0.0) const { return min_facet_value(x) >= -tol; }

private:
    friend DelzantPolygon polygon_from_facets(std::vector<Facet> facets);

    std::vector<Facet> facets_;
    std::vector<Point2> vertices_;
    std::vector<std::array<std::size_t, 2>> edges_;
    bool delzant_ = false;
};

namespace detail {

inline constexpr double kFeasibilityTol = 1e-12;

inline double facet_tolerance(const Facet& f) { return kFeasibilityTol * (1.0 + std::abs(f.offset)); }

// The feasible set of <nu_i, x> >= -c_i is bounded iff the normals
// positively span the plane, i.e. no angular gap between consecutive
// normal directions reaches pi.
inline bool normals_span_plane(const std::vector<Facet>& facets) {
    std::vector<double> angles;
    angles.reserve(facets.size());
    for (const auto& f : facets) angles.push_back(std::atan2(f.normal[1], f.normal[0]));
    std::sort(angles.begin(), angles.end());
    const double pi = std::numbers::pi;
    for (std::size_t k = 0; k < angles.size(); ++k) {
        double next = k + 1 < angles.size() ? angles[k + 1] : angles.front() + 2.0 * pi;
        if (next - angles[k] >= pi - 1e-12) return false;
    }
    return true;
}

}  // namespace detail

/// Vertices are pairwise facet intersections that satisfy every facet
/// inequality within 1e-12.
inline DelzantPolygon polygon_from_facets(std::vector<Facet> facets) {
    if (facets.size() < 3) throw EmptyInterior("a polygon needs at least 3 facets");
    for (const auto& f : facets)
        if (f.normal[0] == 0 && f.normal[1] == 0) throw std::invalid_argument("facet normal must be nonzero");
    if (!detail::normals_span_plane(facets)) throw Unbounded("facet normals do not bound a region");

    std::vector<Point2> points;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        for (std::size_t j = i + 1; j < facets.size(); ++j) {
            const auto& fi = facets[i];
            const auto& fj = facets[j];
            const double det = static_cast<double>(fi.normal[0]) * fj.normal[1] -
                               static_cast<double>(fi.normal[1]) * fj.normal[0];
            if (det == 0.0) continue;
            Point2 p{(-fi.offset * fj.normal[1] + fj.offset * fi.normal[1]) / det,
                     (-fi.normal[0] * fj.offset + fj.normal[0] * fi.offset) / det};
            bool feasible = std::all_of(facets.begin(), facets.end(),
                                        [&](const Facet& f) { return f(p) >= -detail::facet_tolerance(f); });
            if (!feasible) continue;
            bool duplicate = std::any_of(points.begin(), points.end(), [&](Point2 q) {
                return norm(q - p) <= detail::kFeasibilityTol * (1.0 + norm(p));
            });
            if (!duplicate) points.push_back(p);
        }
    }
    if (points.size() < 3) throw EmptyInterior("feasible region has fewer than 3 vertices");

    Point2 center{};
    for (const auto& p : points) center = center + p;
    center = (1.0 / static_cast<double>(points.size())) * center;
    std::sort(points.begin(), points.end(), [&](Point2 a, Point2 b) {
        return std::atan2(a.x2 - center.x2, a.x1 - center.x1) < std::atan2(b.x2 - center.x2, b.x1 - center.x1);
    });
    auto start = std::min_element(points.begin(), points.end(), [](Point2 a, Point2 b) {
        return a.x2 < b.x2 || (a.x2 == b.x2 && a.x1 < b.x1);
    });
    std::rotate(points.begin(), start, points.end());

    DelzantPolygon poly;
    poly.facets_ = std::move(facets);
    poly.vertices_ = std::move(points);
    if (poly.area() <= 1e-14) throw EmptyInterior("polygon has zero area");

    bool delzant = std::all_of(poly.facets_.begin(), poly.facets_.end(), [](const Facet& f) { return f.is_primitive(); });
    const std::size_t nv = poly.vertices_.size();
    poly.edges_.reserve(poly.facets_.size());
    std::vector<std::vector<std::size_t>> facets_at_vertex(nv);
    for (std::size_t fi = 0; fi < poly.facets_.size(); ++fi) {
        const auto& f = poly.facets_[fi];
        std::vector<std::size_t> on;
        for (std::size_t v = 0; v < nv; ++v)
            if (std::abs(f(poly.vertices_[v])) <= detail::facet_tolerance(f) * 10.0) on.push_back(v);
        if (on.size() != 2) {
            // Redundant facet (touches at most a vertex); it carries no edge.
            delzant = false;
            poly.edges_.push_back({nv, nv});
            continue;
        }
        poly.edges_.push_back({on[0], on[1]});
        facets_at_vertex[on[0]].push_back(fi);
        facets_at_vertex[on[1]].push_back(fi);
    }
    for (const auto& at : facets_at_vertex) {
        if (at.size() != 2) {
            delzant = false;
            continue;
        }
        const auto& a = poly.facets_[at[0]].normal;
        const auto& b = poly.facets_[at[1]].normal;
        if (std::abs(a[0] * b[1] - a[1] * b[0]) != 1) delzant = false;
    }
    poly.delzant_ = delzant;
    return poly;
}

/// Facets of the convex polygon with the given counterclockwise vertices.
/// Edge directions must be rational with denominator at most max_denominator
/// so that a primitive integer normal exists.
inline std::vector<Facet> facets_from_vertices(const std::vector<Point2>& vertices, int max_denominator = 64) {
    if (vertices.size() < 3) throw EmptyInterior("need at least 3 vertices");
    std::vector<Facet> facets;
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        const Point2 p = vertices[k];
        const Point2 d = vertices[(k + 1) % vertices.size()] - p;
        const double scale = std::max(std::abs(d.x1), std::abs(d.x2));
        if (scale == 0.0) throw std::invalid_argument("repeated vertex");
        // Inward normal of a counterclockwise edge is the left normal.
        const Point2 n{-d.x2 / scale, d.x1 / scale};
        std::optional<std::array<int, 2>> integer_normal;
        for (int q = 1; q <= max_denominator && !integer_normal; ++q) {
            const double u = q * n.x1, v = q * n.x2;
            const double ru = std::round(u), rv = std::round(v);
            if (std::abs(u - ru) < 1e-9 * q && std::abs(v - rv) < 1e-9 * q) {
                int iu = static_cast<int>(ru), iv = static_cast<int>(rv);
                int g = std::gcd(std::abs(iu), std::abs(iv));
                integer_normal = std::array<int, 2>{iu / g, iv / g};
            }
        }
        if (!integer_normal) throw std::invalid_argument("edge " + std::to_string(k) + " has no small integer normal");
        const auto& nu = *integer_normal;
        facets.push_back({nu, -(nu[0] * p.x1 + nu[1] * p.x2)});
    }
    return facets;
}

/// Facet list from text: one "n1 n2 c" triple per line; '#' starts a comment.
inline std::vector<Facet> parse_facets(std::istream& in) {
    std::vector<Facet> facets;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int n1, n2;
        double c;
        if (!(ls >> n1)) continue;
        std::string rest;
        if (!(ls >> n2 >> c) || (ls >> rest))
            throw std::invalid_argument("facet line " + std::to_string(line_no) + ": expected 'n1 n2 offset'");
        facets.push_back({{n1, n2}, c});
    }
    return facets;
}

/// Polygon scaled by mu about the origin: offsets multiply by mu.
inline DelzantPolygon scaled(const DelzantPolygon& p, double mu) {
    std::vector<Facet> fs = p.facets();
    for (auto& f : fs) f.offset *= mu;
    return polygon_from_facets(std::move(fs));
}

inline DelzantPolygon unit_square() {
    return polygon_from_facets({{{1, 0}, 0.0}, {{0, 1}, 0.0}, {{-1, 0}, 1.0}, {{0, -1}, 1.0}});
}

/// Moment trapezium of CP2 # -CP2: x1 > 0, x2 > 0, 1 - x1 - x2 > 0, x1 + x2 - a > 0.
inline DelzantPolygon page_trapezium(double a) {
    return polygon_from_facets({{{1, 0}, 0.0}, {{0, 1}, 0.0}, {{-1, -1}, 1.0}, {{1, 1}, -a}});
}

/// Moment pentagon of CP2 # 2(-CP2) with vertices (0,0), (a,0), (a,1), (1,a), (0,a).
inline DelzantPolygon clw_pentagon(double a) {
    return polygon_from_facets(facets_from_vertices({{0.0, 0.0}, {a, 0.0}, {a, 1.0}, {1.0, a}, {0.0, a}}));
}

namespace detail {

inline double factorial(int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

// Integral of x1^i x2^j over a triangle: expand both powers in barycentric
// coordinates and use  int l0^a l1^b l2^c = 2|T| a! b! c! / (a+b+c+2)!.
inline double triangle_monomial(Point2 v0, Point2 v1, Point2 v2, int i, int j) {
    const double twice_area = std::abs(cross(v1 - v0, v2 - v0));
    const std::array<double, 3> xs{v0.x1, v1.x1, v2.x1};
    const std::array<double, 3> ys{v0.x2, v1.x2, v2.x2};
    double sum = 0.0;
    for (int a0 = 0; a0 <= i; ++a0)
        for (int a1 = 0; a0 + a1 <= i; ++a1) {
            const int a2 = i - a0 - a1;
            const double cx = factorial(i) / (factorial(a0) * factorial(a1) * factorial(a2)) *
                              std::pow(xs[0], a0) * std::pow(xs[1], a1) * std::pow(xs[2], a2);
            for (int b0 = 0; b0 <= j; ++b0)
                for (int b1 = 0; b0 + b1 <= j; ++b1) {
                    const int b2 = j - b0 - b1;
                    const double cy = factorial(j) / (factorial(b0) * factorial(b1) * factorial(b2)) *
                                      std::pow(ys[0], b0) * std::pow(ys[1], b1) * std::pow(ys[2], b2);
                    sum += cx * cy * factorial(a0 + b0) * factorial(a1 + b1) * factorial(a2 + b2) /
                           factorial(i + j + 2);
                }
        }
    return twice_area * sum;
}

}  // namespace detail

/// Exact integral of x1^i x2^j over the polygon (fan triangulation from the
/// vertex center, closed form per triangle).
inline double integrate_monomial(const DelzantPolygon& p, int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("monomial exponents must be non-negative");
    const auto& vs = p.vertices();
    const Point2 c = p.vertex_center();
    double sum = 0.0;
    for (std::size_t k = 0; k < vs.size(); ++k)
        sum += detail::triangle_monomial(c, vs[k], vs[(k + 1) % vs.size()], i, j);
    return sum;
}

inline double integrate_polynomial(const DelzantPolygon& p, const BivariatePolynomial& poly) {
    double sum = 0.0;
    for (const auto& t : poly.terms) sum += t.coefficient * integrate_monomial(p, t.i, t.j);
    return sum;
}

/// Integral of an affine f over the boundary against the facet measure
/// d sigma = arclength / |nu| (the normalization with dl ^ d sigma = +-dx).
inline double boundary_measure_integral(const DelzantPolygon& p, const AffineFunction& f) {
    double sum = 0.0;
    const auto& vs = p.vertices();
    for (std::size_t k = 0; k < p.facets().size(); ++k) {
        const auto [ia, ib] = p.facet_edges()[k];
        if (ia >= vs.size()) continue;
        const Point2 a = vs[ia], b = vs[ib];
        sum += norm(b - a) * 0.5 * (f(a) + f(b)) / p.facets()[k].normal_length();
    }
    return sum;
}

namespace detail {

// Tensor Gauss rule on a triangle via the collapsed map
// (u, v) -> v0 + u (v1 - v0) + u v (v2 - v1), Jacobian 2|T| u.
template <std::size_t N, class F>
double triangle_gauss(F& f, Point2 v0, Point2 v1, Point2 v2) {
    const auto& rule = GaussLegendre<N>::get();
    const double twice_area = std::abs(cross(v1 - v0, v2 - v0));
    double sum = 0.0;
    for (std::size_t a = 0; a < N; ++a) {
        const double u = 0.5 * (rule.nodes[a] + 1.0);
        for (std::size_t b = 0; b < N; ++b) {
            const double v = 0.5 * (rule.nodes[b] + 1.0);
            const Point2 x = v0 + u * (v1 - v0) + (u * v) * (v2 - v1);
            sum += 0.25 * rule.weights[a] * rule.weights[b] * u * f(x);
        }
    }
    return twice_area * sum;
}

}  // namespace detail

struct PolygonQuadratureOptions {
    int max_depth = 12;
};

/// Integral of a bounded function over the polygon: fan triangulation and
/// adaptive 4-way triangle refinement with an 8x8 collapsed Gauss rule.
template <class F>
QuadratureResult integrate_function(const DelzantPolygon& p, F&& f, double tol, PolygonQuadratureOptions options = {}) {
    constexpr std::size_t kPoints = 8;
    struct Tri {
        Point2 a, b, c;
        double estimate;
        int depth;
    };
    const double total_area = p.area();
    const auto& vs = p.vertices();
    const Point2 center = p.vertex_center();
    std::vector<Tri> stack;
    std::size_t evaluations = 0;
    for (std::size_t k = 0; k < vs.size(); ++k) {
        Point2 a = center, b = vs[k], c = vs[(k + 1) % vs.size()];
        stack.push_back({a, b, c, detail::triangle_gauss<kPoints>(f, a, b, c), 0});
        evaluations += kPoints * kPoints;
    }
    double total = 0.0, error = 0.0;
    bool converged = true;
    while (!stack.empty()) {
        Tri t = stack.back();
        stack.pop_back();
        const Point2 ab = 0.5 * (t.a + t.b), bc = 0.5 * (t.b + t.c), ca = 0.5 * (t.c + t.a);
        const std::array<std::array<Point2, 3>, 4> kids{{{t.a, ab, ca}, {ab, t.b, bc}, {ca, bc, t.c}, {ab, bc, ca}}};
        std::array<double, 4> vals{};
        double refined = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            vals[k] = detail::triangle_gauss<kPoints>(f, kids[k][0], kids[k][1], kids[k][2]);
            refined += vals[k];
        }
        evaluations += 4 * kPoints * kPoints;
        const double diff = std::abs(refined - t.estimate);
        const double share = tol * std::abs(cross(t.b - t.a, t.c - t.a)) * 0.5 / total_area;
        if (diff <= share || t.depth >= options.max_depth) {
            if (diff > share) converged = false;
            total += refined;
            error += diff;
        } else {
            for (std::size_t k = 0; k < 4; ++k) stack.push_back({kids[k][0], kids[k][1], kids[k][2], vals[k], t.depth + 1});
        }
    }
    if (!converged && error > tol) throw NonConvergence("integrate_function: refinement limit reached", total, error);
    return {total, error, evaluations};
}

}  // namespace rfcone
