#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "rfcone/numerics/errors.hpp"
#include "rfcone/numerics/interval.hpp"
#include "rfcone/numerics/linear.hpp"
#include "rfcone/numerics/optimize.hpp"
#include "rfcone/numerics/polynomial.hpp"
#include "rfcone/numerics/quadrature.hpp"
#include "rfcone/numerics/roots.hpp"

using namespace rfcone;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("interval rejects empty brackets") {
    CHECK_THROWS_AS(Interval(1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Interval(2.0, 1.0), std::invalid_argument);
    const Interval i(0.0, 2.0);
    CHECK(i.width() == 2.0);
    CHECK(i.midpoint() == 1.0);
    CHECK(i.contains(0.0));
    CHECK_FALSE(i.contains(2.5));
}

TEST_CASE("polynomial arithmetic is exact") {
    const Polynomial p{1, 2, 3};
    CHECK(p.degree() == 2);
    CHECK(p(Rational(1, 2)) == Rational(11, 4));
    CHECK(p.derivative() == Polynomial{2, 6});
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    const Polynomial q = Polynomial{-1, 1} * Polynomial{1, 1};
    CHECK(q == Polynomial{-1, 0, 1});
    CHECK(q(3.0) == 8.0);
    CHECK(poly_eval(Polynomial::monomial(Rational(2), 3), Rational(3)) == 54);
}

TEST_CASE("decimal strings convert exactly") {
    CHECK(rational_from_decimal("4.2") == Rational(21, 5));
    CHECK(rational_from_decimal("-0.01") == Rational(-1, 100));
    CHECK(rational_from_decimal("3") == 3);
    CHECK(to_rational(0.5) == Rational(1, 2));
}

TEST_CASE("rational function evaluation and poles") {
    const RationalFunction f(Polynomial{1}, Polynomial{0, 1});
    CHECK(f(Rational(1, 4)) == 4);
    CHECK_THROWS_AS(f(Rational(0)), DomainError);
    CHECK(std::isinf(f(0.0)));
    CHECK_THROWS_AS(RationalFunction(Polynomial{1}, Polynomial{}), std::invalid_argument);
    const auto g = f.derivative();
    CHECK(g(Rational(2)) == Rational(-1, 4));
    const auto h = f * f - f / f;
    CHECK(h(Rational(2)) == Rational(-3, 4));
}

TEST_CASE("quartic root in (0, 1/2)") {
    const Polynomial quartic{1, 0, -6, -16, 9};
    const double root = find_root(quartic, Interval(0.0, 0.5), 1e-14);
    CHECK_THAT(root, WithinAbs(0.3140769208911752, 1e-13));
    CHECK(std::abs(quartic(root)) < 1e-12);
    const double polished = find_root(quartic, Interval(0.0, 0.5), 1e-14, RootOptions{true});
    CHECK_THAT(polished, WithinAbs(root, 1e-13));
}

TEST_CASE("root finding examples") {
    CHECK_THAT(find_root(Polynomial{-2, 0, 1}, Interval(0.0, 2.0), 1e-14), WithinAbs(std::numbers::sqrt2, 1e-13));
    CHECK_THROWS_AS(find_root(Polynomial{1, 0, 1}, Interval(-1.0, 1.0), 1e-12), NoSignChange);
    CHECK_THAT(bisect([](double x) { return std::cos(x); }, Interval(0.0, 3.0), 1e-14, 200),
               WithinAbs(std::numbers::pi / 2, 1e-13));
}

TEST_CASE("root is invariant under bracket choice") {
    const Polynomial quartic{1, 0, -6, -16, 9};
    const double r1 = find_root(quartic, Interval(0.0, 0.5), 1e-14);
    const double r2 = find_root(quartic, Interval(0.2, 0.4), 1e-14);
    CHECK(std::abs(r1 - r2) < 1e-13);
}

TEST_CASE("maximization on a grid with refinement") {
    const auto m = maximize_1d([](double x) { return -(x - 0.3) * (x - 0.3); }, Interval(0.0, 1.0), 1e-12);
    CHECK_THAT(m.argmax, WithinAbs(0.3, 1e-6));
    CHECK_THAT(m.value, WithinAbs(0.0, 1e-12));
    // Monotone function: the maximum sits at the closed endpoint.
    const auto e = maximize_1d([](double x) { return x; }, Interval(0.0, 1.0), 1e-12);
    CHECK(e.argmax == 1.0);
    // Ties go to the smallest argument.
    const auto t = maximize_1d([](double) { return 1.0; }, Interval(0.0, 1.0), 1e-12);
    CHECK(t.argmax == 0.0);
}

TEST_CASE("3x3 solve") {
    const Matrix3 m{{{4, 1, 0}, {1, 3, 1}, {0, 1, 2}}};
    const Vector3 b{1, 2, 3};
    const auto s = solve_linear_3(m, b);
    CHECK(s.residual < 1e-14);
    CHECK(residual_inf(m, s.x, b) < 1e-14);
    const Matrix3 singular{{{1, 2, 3}, {2, 4, 6}, {1, 1, 1}}};
    CHECK_THROWS_AS(solve_linear_3(singular, b), SingularMatrix);
}

TEST_CASE("Gauss-Legendre exactness") {
    CHECK_THAT(gauss_legendre<8>([](double x) { return std::pow(x, 15); }, 0.0, 1.0), WithinRel(1.0 / 16.0, 1e-14));
    const auto r = integrate_1d([](double x) { return std::exp(x); }, Interval(0.0, 1.0), 1e-13);
    CHECK_THAT(r.value, WithinAbs(std::numbers::e - 1.0, 1e-13));
    CHECK(r.error_estimate <= 1e-13);
}

TEST_CASE("quadrature reports non-convergence with a partial value") {
    QuadratureOptions opt;
    opt.max_depth = 2;
    try {
        integrate_1d([](double x) { return 1.0 / std::sqrt(x); }, Interval(1e-12, 1.0), 1e-14, opt);
        FAIL("expected NonConvergence");
    } catch (const NonConvergence& e) {
        CHECK(e.partial_value() > 0.0);
        CHECK(e.error_estimate() > 1e-14);
    }
}

TEST_CASE("exact and floating polynomial evaluation agree") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coeff(-20, 20);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> c;
        for (int k = 0; k < 6; ++k) c.push_back(coeff(rng));
        const Polynomial p(c);
        const Rational x(coeff(rng), 7);
        CHECK_THAT(p(to_double(x)), WithinAbs(to_double(p(x)), 1e-9 * (1.0 + std::abs(to_double(p(x))))));
    }
}
