#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "rfcone/page.hpp"

using namespace rfcone;
using namespace rfcone::page;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const double kAStar = page_critical_a();

}  // namespace

TEST_CASE("f'' closed form at a = t = 1/2 (boundary excluded for double evaluation)") {
    CHECK_THROWS_AS(page_fpp(0.5, 0.5), DomainError);
    // The exact rational function has no such restriction.
    CHECK(page_fpp_function(Rational(1, 2))(Rational(1, 2)) == Rational(4, 13) - 2);
    CHECK(page_fpp(Rational(1, 2), Rational(3, 4)) == page_fpp_function(Rational(1, 2))(Rational(3, 4)));
    CHECK_THROWS_AS(page_fpp(0.5, 1.0), DomainError);
    CHECK_THROWS_AS(page_fpp(1.5, 0.5), DomainError);
}

TEST_CASE("f'' first-term denominator positive across the slab") {
    for (int i = 1; i < 100; ++i) {
        const double a = i / 100.0;
        for (int k = 0; k <= 50; ++k) {
            const double t = a + (1 - a) * k / 50.0;
            CHECK(2 * a * t * t + (1 + 2 * a - a * a) * t + 2 * a * a > 0.0);
        }
    }
}

TEST_CASE("scalar curvature coefficients") {
    const auto c = page_scal_coeffs(Rational(1, 3));
    CHECK(c.c2 == Rational(54, 22));
    CHECK(c.c1 == Rational(24, 1) / 3 / (Rational(2, 3) * Rational(22, 9)));
    const auto small = page_scal_coeffs(1e-12);
    CHECK_THAT(small.c1, WithinAbs(0.0, 1e-10));
    CHECK_THAT(small.c2, WithinAbs(6.0, 1e-10));
    const auto crit = page_scal_coeffs(kAStar);
    CHECK_THAT(crit.c1, WithinAbs(4.666484, 1e-6));
    CHECK_THAT(crit.c2, WithinAbs(2.615217, 1e-6));
}

TEST_CASE("scalar curvature coefficients match the Donaldson solve") {
    for (double a : {0.1, kAStar, 0.5, 0.8}) {
        const auto c = page_scal_coeffs(a);
        const auto s = extremal_affine_coefficients(page_polygon(a));
        CHECK_THAT(s.a1, WithinAbs(c.c1, 1e-6));
        CHECK_THAT(s.a2, WithinAbs(c.c1, 1e-6));
        CHECK_THAT(s.b, WithinAbs(c.c2, 1e-6));
    }
}

TEST_CASE("critical class") {
    CHECK_THAT(kAStar, WithinAbs(0.31408, 5e-6));
    CHECK_THAT(1.0 / kAStar, WithinAbs(3.1839, 5e-4));
    CHECK(std::abs(critical_quartic()(kAStar)) < 1e-9);
    CHECK_THAT(page_critical_a(1e-10), WithinAbs(0.31408, 5e-6));
}

TEST_CASE("kappa is t-independent exactly at the critical class") {
    for (double t : {0.35, 0.5, 0.7, 0.95}) {
        CHECK_THAT(page_conformal_scal(kAStar, t), WithinAbs(182.219, 1e-3));
        CHECK(std::abs(page_conformal_scal_dt(kAStar, t)) < 1e-6);
        CHECK(std::abs(page_conformal_scal_dt(0.5, t)) > 1e-2);
    }
    CHECK(page_conformal_scal(0.5, 0.6) != page_conformal_scal(0.5, 0.8));
}

TEST_CASE("t-derivative of kappa matches finite differences") {
    const double a = 0.5, t = 0.7, h = 1e-5;
    const double fd = (page_conformal_scal(a, t + h) - page_conformal_scal(a, t - h)) / (2 * h);
    CHECK_THAT(page_conformal_scal_dt(a, t), WithinRel(fd, 1e-6));
}

TEST_CASE("kappa from the pointwise identity at 10 interior points") {
    const auto u = page_potential(kAStar);
    const auto s = page_scal_function(kAStar);
    const double kappa = page_conformal_scal(kAStar, 0.6);
    for (const auto& x : page_sample_points(kAStar, 10, 0.02)) {
        CHECK_THAT(page_kappa_from_identity(u, s, x), WithinAbs(kappa, 1e-3));
    }
}

TEST_CASE("Delta s^2 closed form agrees with the conformal identity") {
    const auto u = page_potential(kAStar);
    const auto s = page_scal_function(kAStar);
    const double kappa = page_kappa_constant_part(kAStar);
    for (const auto& x : page_sample_points(kAStar, 10, 0.01, 99u)) {
        const double closed = page_delta_s2(kAStar, x.x1 + x.x2).value;
        const double assembled = delta_s2_identity(kappa, gradient_norm_squared(u, s, x), s(x));
        CHECK_THAT(closed, WithinAbs(assembled, 1e-4));
    }
}

TEST_CASE("Delta s^2 variable part is exact in rationals") {
    // kappa/3 + variable part evaluated exactly must equal the same expression
    // recombined from the polynomial pieces.
    const Rational a(1, 3), t(1, 2);
    const auto v = page_delta_s2_variable_part(a, t);
    Rational sum(0);
    Rational power(1);
    for (const auto& alpha : delta_s2_alphas()) {
        sum += alpha(a) * power;
        power *= t;
    }
    CHECK(v == sum / (scal_denominator()(a) * t));
}

TEST_CASE("Delta s^2 domain and advisory flag") {
    CHECK_FALSE(page_delta_s2(kAStar, kAStar).advisory);
    CHECK_FALSE(page_delta_s2(kAStar, 1.0).advisory);
    CHECK(page_delta_s2(0.5, 0.7).advisory);
    CHECK_THROWS_AS(page_delta_s2(kAStar, 0.2), DomainError);
    CHECK_THROWS_AS(page_delta_s2(kAStar, 1.01), DomainError);
}

TEST_CASE("t-averaged kappa off the critical class") {
    const double a = 0.5;
    const auto r = integrate_1d([&](double t) { return page_conformal_scal(a, t); }, Interval(a, 1.0), 1e-12);
    CHECK_THAT(page_kappa_average(a), WithinRel(r.value / (1.0 - a), 1e-10));
    CHECK_THAT(page_kappa_average(kAStar), WithinRel(page_kappa_constant_part(kAStar), 1e-9));
}

TEST_CASE("volume and Einstein constant") {
    const double v = page_volume(kAStar);
    CHECK_THAT(v, WithinAbs(0.072699, 1e-5));
    const double lambda = page_lambda_from_volume(v);
    CHECK_THAT(lambda, WithinAbs(45.554, 5e-3));
    CHECK_THAT(4.0 * lambda, WithinAbs(182.219, 1e-2));
}

TEST_CASE("volume of a constant on the unit square") {
    const double c = 1.7;
    const auto r = integrate_function(unit_square(), [&](Point2) { return std::pow(c, -4.0); }, 1e-14);
    CHECK_THAT(kTorusVolume * r.value, WithinRel(16.0 * std::numbers::pi * std::numbers::pi * std::pow(c, -4.0), 1e-13));
}

TEST_CASE("full analysis") {
    const auto r = page_full_analysis();
    CHECK(r.a_star > 0.0);
    CHECK(r.a_star < 1.0);
    CHECK(r.kappa >= 182.2);
    CHECK(r.kappa <= 182.24);
    CHECK_THAT(r.kappa_identity_mean, WithinAbs(r.kappa, 1e-3));
    CHECK_THAT(r.kappa_from_volume, WithinAbs(r.kappa, 1e-3));
    CHECK_THAT(r.ratio, WithinRel(12.0 * r.K / r.kappa, 1e-15));
    CHECK(r.ratio < 2.65);
    CHECK(r.ratio < kConeInstabilityThreshold - 1.0);
    CHECK(r.cone_unstable);
    CHECK(r.shrinker_unstable);
    CHECK_THAT(r.solver_scal.a1 - r.solver_scal.a2, WithinAbs(0.0, 1e-9));
    CHECK_THAT(r.lambda_einstein, WithinAbs(r.kappa / 4.0, 1e-2));
}

TEST_CASE("K is stable under doubling the sample density") {
    PageOptions coarse, fine;
    fine.samples = 2 * coarse.samples;
    const auto a = page_full_analysis(coarse), b = page_full_analysis(fine);
    CHECK(std::abs(a.K - b.K) < 1e-6);
}

TEST_CASE("sup of Delta s^2 matches a brute-force scan") {
    const auto r = page_full_analysis();
    double best = -1e300;
    for (int k = 0; k <= 100000; ++k) best = std::max(best, page_delta_s2(r.a_star, r.a_star + (1 - r.a_star) * k / 100000.0).value);
    CHECK(r.K >= best - 1e-12);
    CHECK(r.K - best < 1e-6);
}
