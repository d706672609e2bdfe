#include <doctest.h>

#include <cmath>
#include <limits>

#include "generators.hpp"
#include "reference_values.hpp"
#include "scarf/errors.hpp"
#include "scarf/potential.hpp"

using namespace scarf;

TEST_SUITE("potential") {

TEST_CASE("regime classification") {
    CHECK(classify_regime(2.0) == Regime::BoundStates);
    CHECK(classify_regime(0.4) == Regime::Bands);
    CHECK(classify_regime(0.5) == Regime::FreeParticle);
    CHECK(classify_regime(0.0) == Regime::Unsupported);
    CHECK(classify_regime(-1.0) == Regime::Unsupported);
    CHECK(classify_regime(std::nan("")) == Regime::Unsupported);
    CHECK(classify_regime(std::numeric_limits<double>::infinity()) == Regime::Unsupported);
    CHECK(classify_regime(0.5000001) == Regime::BoundStates);
    CHECK(classify_regime(0.4999999) == Regime::Bands);
    CHECK(to_string(Regime::Bands) == "bands");
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(PotentialParams::create(0.0), DomainError);
    CHECK_THROWS_AS(PotentialParams::create(-0.3), DomainError);
    CHECK_THROWS_AS(PotentialParams::create(std::nan("")), DomainError);
    CHECK_THROWS_AS(PotentialParams::create(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(PotentialParams::create(1.0, 1.0, -2.0), DomainError);
    CHECK_THROWS_AS(PotentialParams::create(1.0, std::numeric_limits<double>::infinity()), DomainError);
    const auto p = PotentialParams::create(0.5);
    CHECK(p.v0() == 0.0);
    CHECK(p.regime() == Regime::FreeParticle);
}

TEST_CASE("well depth reconstructs the coupling") {
    for (double s : gen::uniform(0.05, 6.0, 200, 3)) {
        for (double a : {0.5, 1.0, 3.0}) {
            const auto p = PotentialParams::create(s, a, 1.7);
            CHECK(p.coupling_from_v0() == doctest::Approx(s).epsilon(1e-12));
        }
    }
}

TEST_CASE("potential values") {
    const auto bound = PotentialParams::create(2.0);
    CHECK(evaluate_potential(bound, 0.5) == doctest::Approx(ref::v_s2_mid).epsilon(1e-14));
    CHECK(evaluate_potential(bound, 0.13) == doctest::Approx(ref::v_s2_x013).epsilon(1e-13));
    const auto bands = PotentialParams::create(0.4);
    CHECK(evaluate_potential(bands, 0.5) == doctest::Approx(ref::v_s04_mid).epsilon(1e-14));
    CHECK(evaluate_potential(bands, 0.5) < 0.0);
    CHECK(evaluate_potential(bound, 0.31) > 0.0);
    const auto free = PotentialParams::create(0.5);
    for (double x : {0.01, 0.3, 0.77, 5.5}) CHECK(evaluate_potential(free, x) == 0.0);
}

TEST_CASE("lattice points are singular") {
    const auto p = PotentialParams::create(2.0, 1.5);
    for (double x : {0.0, 1.5, -3.0, 15.0, 1e-13}) {
        CHECK_THROWS_AS(evaluate_potential(p, x), SingularityError);
        CHECK_THROWS_AS(cot_map(x, 1.5), SingularityError);
    }
    CHECK_NOTHROW(evaluate_potential(p, 1e-9));
    CHECK_THROWS_AS(evaluate_potential(p, std::nan("")), DomainError);
    CHECK(on_lattice(3.0, 1.5));
    CHECK_FALSE(on_lattice(3.1, 1.5));
}

TEST_CASE("periodicity and reflection") {
    const auto p = PotentialParams::create(0.4, 2.0, 1.0);
    for (double x : gen::uniform(0.001, 1.999, 100, 5)) {
        const double v = evaluate_potential(p, x);
        CHECK(evaluate_potential(p, x + 2.0) == doctest::Approx(v).epsilon(1e-12));
        CHECK(evaluate_potential(p, x - 6.0) == doctest::Approx(v).epsilon(1e-12));
        CHECK(cot_map(x + 2.0, 2.0) == doctest::Approx(cot_map(x, 2.0)).epsilon(1e-12));
    }
    for (double u : gen::uniform(0.0, 0.999, 100, 6)) {
        CHECK(evaluate_potential(p, 1.0 + u) == doctest::Approx(evaluate_potential(p, 1.0 - u)).epsilon(1e-12));
    }
}

TEST_CASE("inverse-square coefficient at the wall") {
    for (double s : {2.0, 0.4, 0.9}) {
        const auto p = PotentialParams::create(s);
        const double coefficient = -(0.25 - s * s) / 2.0;
        for (double x : {1e-4, 5e-4, 9e-4}) {
            CHECK(evaluate_potential(p, x) * x * x == doctest::Approx(coefficient).epsilon(0.01));
        }
    }
}

TEST_CASE("cot map") {
    CHECK(cot_map(0.5, 1.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(cot_map(0.25, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cot_map(0.9, 1.0) == doctest::Approx(ref::cot_09).epsilon(1e-13));
    CHECK(inverse_cot_map(0.0, 0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(inverse_cot_map(1.0, 0, 1.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(inverse_cot_map(ref::cot_09, 0, 1.0) == doctest::Approx(0.9).epsilon(1e-13));
    CHECK(inverse_cot_map(-3.0, 0, 1.0) == doctest::Approx(ref::inv_cot_m3).epsilon(1e-14));
    CHECK(inverse_cot_map(1.0, 3, 2.0) == doctest::Approx(6.5).epsilon(1e-15));
    CHECK_THROWS_AS(inverse_cot_map(std::nan(""), 0, 1.0), DomainError);
}

TEST_CASE("cot map round trip and monotonicity") {
    for (double y : gen::uniform(-50.0, 50.0, 300, 9)) {
        for (long k : {-2L, 0L, 4L}) {
            const double x = inverse_cot_map(y, k, 1.3);
            CHECK(x > k * 1.3);
            CHECK(x < (k + 1) * 1.3);
            CHECK(cot_map(x, 1.3) == doctest::Approx(y).epsilon(1e-12).scale(1.0));
        }
    }
    double previous = cot_map(0.001, 1.0);
    for (int i = 2; i < 1000; ++i) {
        const double y = cot_map(i * 0.001, 1.0);
        CHECK(y < previous);
        previous = y;
    }
}

TEST_CASE("reduce to cell") {
    CHECK(reduce_to_cell(2.25, 1.0) == doctest::Approx(0.25));
    CHECK(reduce_to_cell(-0.25, 1.0) == doctest::Approx(0.75));
    const double r = reduce_to_cell(-1e-18, 1.0);
    CHECK(r >= 0.0);
    CHECK(r < 1.0);
}

}
