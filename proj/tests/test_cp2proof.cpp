#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rfcone/cp2proof.hpp"

using namespace rfcone;
using namespace rfcone::cp2;
using Catch::Matchers::WithinAbs;

TEST_CASE("witness coefficients are exact") {
    const auto c = cp2_coefficients(reference_witness());
    CHECK(c.c_A == Rational(14, 5));
    CHECK(c.c_B == Rational(9, 25));
    CHECK(c.c_C == 1);
    CHECK(c.c_trC == Rational(6, 5));
    CHECK(c.min() == Rational(9, 25));
    CHECK(cp2_feasible(reference_witness()));
}

TEST_CASE("floating evaluation matches") {
    const auto c = cp2_coefficients(ProofParameters<double>{4.2, 4.0, 1.0});
    CHECK_THAT(c.c_A, WithinAbs(2.8, 1e-12));
    CHECK_THAT(c.c_B, WithinAbs(0.36, 1e-12));
    CHECK_THAT(c.c_C, WithinAbs(1.0, 1e-12));
    CHECK_THAT(c.c_trC, WithinAbs(1.2, 1e-12));
}

TEST_CASE("infeasible points") {
    CHECK_FALSE(cp2_feasible(ProofParameters<Rational>{0, 0, 1}));
    CHECK_FALSE(cp2_feasible(ProofParameters<Rational>{4, 3, 1}));
    const auto c = cp2_coefficients(ProofParameters<Rational>{4, 3, 1});
    CHECK(c.c_A == 1);
    CHECK(c.c_B == -12);
    CHECK_THROWS_AS(cp2_coefficients(ProofParameters<Rational>{4, 4, 0}), std::invalid_argument);
}

TEST_CASE("absolute value branch on both sides of alpha = 4") {
    const auto lo = cp2_coefficients(ProofParameters<Rational>{Rational(38, 10), 4, 1});
    const auto hi = cp2_coefficients(ProofParameters<Rational>{Rational(42, 10), 4, 1});
    CHECK(lo.c_trC == hi.c_trC);
    CHECK(lo.c_A == 38 - 39 - Rational(1, 5));
}

TEST_CASE("boundary beta^2 = 18 zeroes c_C exactly") {
    CHECK(cp2_c_coefficient_from_beta_squared(Rational(18)) == 0);
    CHECK(cp2_c_coefficient_from_beta_squared(Rational(16)) == 1);
}

TEST_CASE("Kato-Hardy constants") {
    const auto k = kato_hardy_constants(5);
    CHECK_THAT(k.scalar, WithinAbs(2.25, 1e-15));
    CHECK_THAT(k.vector, WithinAbs(4.5, 1e-15));
    CHECK_THAT(k.tensor, WithinAbs(2.25, 1e-15));
    CHECK(k.vector == 2.0 * k.scalar);
}

TEST_CASE("Young inequality holds at random samples") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-10.0, 10.0), pos(0.01, 5.0);
    for (int k = 0; k < 10000; ++k) CHECK(young_slack(u(rng), pos(rng), u(rng), u(rng)) >= -1e-9);
}

TEST_CASE("default search region") {
    const auto r = cp2_default_search(true);
    CHECK(r.scanned == 41 * 71);
    CHECK(r.feasible > 0);
    CHECK(r.exact_recheck_passed);
    bool has_witness = false;
    for (const auto& p : r.points) {
        CHECK(cp2_feasible(p.exact));
        if (p.exact.alpha == Rational(21, 5) && p.exact.beta == 4 && p.exact.epsilon == 1) has_witness = true;
    }
    CHECK(has_witness);
    CHECK(r.max_margin_value >= 0.36);
    CHECK(r.hull_lo[0] <= 4.2);
    CHECK(r.hull_hi[0] >= 4.2);
}

TEST_CASE("grid axis counts") {
    const GridAxis ax{Rational(1), Rational(2), Rational(1, 4)};
    CHECK(ax.count() == 5);
    CHECK(ax.at(4) == 2);
    CHECK(GridAxis{Rational(1), Rational(1), Rational(1)}.count() == 1);
    CHECK_THROWS_AS((GridAxis{Rational(2), Rational(1), Rational(1)}.count()), std::invalid_argument);
}

TEST_CASE("empty region when every point fails") {
    const auto r = cp2_feasible_region({Rational(0), Rational(1), Rational(1, 2)}, {Rational(0), Rational(1), Rational(1, 2)},
                                       {Rational(1), Rational(1), Rational(1)});
    CHECK(r.feasible == 0);
    CHECK_FALSE(r.max_margin);
}
