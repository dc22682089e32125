#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "viransatz/potential.hpp"

using namespace viransatz;

namespace {

EvenPolynomialPotential random_potential(testutil::Rng& rng) {
    std::vector<PotentialTerm> terms;
    for (int degree = 2; degree <= 8; degree += 2)
        if (rng.coin()) terms.push_back({degree, rng.uniform(0.01, 10.0)});
    if (terms.empty()) terms.push_back({2, rng.uniform(0.01, 10.0)});
    return EvenPolynomialPotential::validate(terms);
}

}  // namespace

TEST_CASE("quartic shorthand builds canonical term lists") {
    const auto ho = EvenPolynomialPotential::quartic(1.0, 0.0);
    REQUIRE(ho.terms().size() == 1);
    CHECK(ho.terms()[0].degree == 2);
    CHECK(ho.terms()[0].coefficient == 0.5);

    const auto quartic = EvenPolynomialPotential::quartic(1.0, 1.0);
    REQUIRE(quartic.terms().size() == 2);
    CHECK(quartic.terms()[0].degree == 2);
    CHECK(quartic.terms()[0].coefficient == 0.5);
    CHECK(quartic.terms()[1].degree == 4);
    CHECK(quartic.terms()[1].coefficient == 0.5);

    const auto pure = EvenPolynomialPotential::quartic(0.0, 2.0);
    REQUIRE(pure.terms().size() == 1);
    CHECK(pure.terms()[0].degree == 4);
    CHECK(pure.terms()[0].coefficient == 1.0);

    CHECK_THROWS_AS(EvenPolynomialPotential::quartic(0.0, 0.0), ValidationError);
    CHECK_THROWS_AS(EvenPolynomialPotential::quartic(-1.0, 1.0), ValidationError);
}

TEST_CASE("potential evaluation at simple points") {
    const auto p = EvenPolynomialPotential::quartic(1.0, 1.0);
    CHECK(p.value(0.0) == 0.0);
    CHECK(p.value(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.value(-1.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("virial integrand x U'") {
    const auto quartic = EvenPolynomialPotential::quartic(1.0, 1.0);
    CHECK(quartic.virial_integrand(1.0) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(quartic.virial_integrand(0.0) == 0.0);

    const auto pure = EvenPolynomialPotential::validate({{4, 0.5}});
    CHECK(pure.virial_integrand(2.0) == doctest::Approx(32.0).epsilon(1e-15));
}

TEST_CASE("radicand values") {
    const auto quartic = EvenPolynomialPotential::quartic(1.0, 1.0);
    CHECK(quartic.radicand(1.0) == doctest::Approx(12.0).epsilon(1e-15));
    CHECK(quartic.radicand(0.0) == 0.0);

    const double omega = 1.3;
    const auto ho = EvenPolynomialPotential::quartic(omega, 0.0);
    const double x = 0.7;
    CHECK(ho.radicand(x) ==
          doctest::Approx(4.0 * omega * omega * x * x).epsilon(1e-15));
}

TEST_CASE("validate rejects malformed potentials") {
    CHECK_NOTHROW(EvenPolynomialPotential::validate({{2, 0.5}}));

    CHECK_THROWS_WITH_AS(static_cast<void>(EvenPolynomialPotential::validate({{3, 1.0}})),
                         doctest::Contains("OddDegree"), ValidationError);
    CHECK_THROWS_AS(static_cast<void>(EvenPolynomialPotential::validate({{0, 1.0}})),
                    ValidationError);
    CHECK_THROWS_AS(static_cast<void>(EvenPolynomialPotential::validate({{-2, 1.0}})),
                    ValidationError);

    CHECK_THROWS_WITH_AS(static_cast<void>(EvenPolynomialPotential::validate({})),
                         doctest::Contains("NoConfinement"), ValidationError);
    CHECK_THROWS_WITH_AS(
        static_cast<void>(EvenPolynomialPotential::validate({{2, 1.0}, {4, -0.5}})),
        doctest::Contains("NoConfinement"), ValidationError);

    // radicand -4x^2 + 8x^4 is negative near the origin (x = 0.1 gives
    // -0.04 + 0.0008), so the ansatz square root does not exist
    CHECK_THROWS_WITH_AS(
        static_cast<void>(EvenPolynomialPotential::validate({{2, -0.5}, {4, 0.5}})),
        doctest::Contains("NegativeRadicand"), ValidationError);
}

TEST_CASE("validate canonicalizes duplicates and zeros") {
    const auto merged = EvenPolynomialPotential::validate({{2, 0.25}, {2, 0.25}});
    REQUIRE(merged.terms().size() == 1);
    CHECK(merged.terms()[0].coefficient == 0.5);

    const auto dropped = EvenPolynomialPotential::validate({{2, 0.0}, {4, 1.0}});
    REQUIRE(dropped.terms().size() == 1);
    CHECK(dropped.terms()[0].degree == 4);

    const auto sorted = EvenPolynomialPotential::validate({{6, 1.0}, {2, 0.5}});
    CHECK(sorted.terms()[0].degree == 2);
    CHECK(sorted.terms()[1].degree == 6);
}

TEST_CASE("mixed-sign coefficients hinge on radicand nonnegativity") {
    // v(u) = 2u - 0.8u^2 + 6u^3 stays positive: discriminant of
    // 2 - 0.8u + 6u^2 is negative
    CHECK_NOTHROW(EvenPolynomialPotential::validate({{2, 1.0}, {4, -0.1}, {6, 1.0}}));

    // v(u) = 2u - 8u^2 + 0.6u^3 dips negative (u = 1 gives -5.4)
    CHECK_THROWS_WITH_AS(
        static_cast<void>(EvenPolynomialPotential::validate({{2, 1.0}, {4, -2.0}, {6, 0.1}})),
        doctest::Contains("NegativeRadicand"), ValidationError);
}

TEST_CASE("evaluation is bit-exact even in x") {
    testutil::Rng rng(20240811);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto p = random_potential(rng);
        const double x = rng.uniform(-20.0, 20.0);
        CHECK(p.value(x) == p.value(-x));
        CHECK(p.virial_integrand(x) == p.virial_integrand(-x));
        CHECK(p.radicand(x) == p.radicand(-x));
    }
}

TEST_CASE("radicand equals 4 times the virial integrand exactly") {
    testutil::Rng rng(777);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto p = random_potential(rng);
        const double x = rng.uniform(-15.0, 15.0);
        CHECK(p.radicand(x) == 4.0 * p.virial_integrand(x));
    }
}

TEST_CASE("validate is idempotent") {
    testutil::Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = random_potential(rng);
        const auto again = EvenPolynomialPotential::validate(p.terms());
        CHECK(p == again);
    }
}
