#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "viransatz/observables.hpp"

using namespace viransatz;

namespace {

AnsatzWavefunction build_quartic(double omega, double lambda) {
    return AnsatzWavefunction::build(EvenPolynomialPotential::quartic(omega, lambda));
}

}  // namespace

TEST_CASE("oscillator moments") {
    const auto aw = build_quartic(1.0, 0.0);
    CHECK(moment(aw, 2) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(moment(aw, 0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(moment(aw, 3) == 0.0);
    CHECK(moment(aw, 1) == 0.0);
    CHECK_THROWS_AS(static_cast<void>(moment(aw, -2)), ValidationError);

    const auto aw2 = build_quartic(2.0, 0.0);
    CHECK(moment(aw2, 2) == doctest::Approx(0.25).epsilon(1e-10));
    // Gaussian fourth moment 3 <x^2>^2
    CHECK(moment(aw2, 4) == doctest::Approx(3.0 * 0.25 * 0.25).epsilon(1e-9));
}

TEST_CASE("Fisher information of the oscillator is 2 omega") {
    CHECK(fisher_information_gradient(build_quartic(1.0, 0.0)) ==
          doctest::Approx(2.0).epsilon(1e-9));
    CHECK(fisher_information_gradient(build_quartic(2.0, 0.0)) ==
          doctest::Approx(4.0).epsilon(1e-9));
    CHECK(fisher_information_virial(build_quartic(1.0, 0.0)) ==
          doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("gradient and virial routes are the same integral") {
    const auto quartic = build_quartic(1.0, 1.0);
    CHECK(std::abs(fisher_information_gradient(quartic) -
                   fisher_information_virial(quartic)) <= 1e-9);

    const auto pure = build_quartic(0.0, 0.5);  // a4 = 1/4
    CHECK(std::abs(fisher_information_gradient(pure) - fisher_information_virial(pure)) <=
          1e-9);
    CHECK(fisher_information_virial(pure) ==
          doctest::Approx(8.0 * 2.0 * 0.25 * moment(pure, 4)).epsilon(1e-12));
}

TEST_CASE("potential expectation") {
    CHECK(potential_expectation(build_quartic(1.0, 0.0)) ==
          doctest::Approx(0.25).epsilon(1e-9));

    const auto quartic = build_quartic(1.0, 1.0);
    CHECK(potential_expectation(quartic) ==
          doctest::Approx(0.5 * moment(quartic, 2) + 0.5 * moment(quartic, 4))
              .epsilon(1e-12));

    const auto pure = build_quartic(0.0, 1.0);
    CHECK(potential_expectation(pure) ==
          doctest::Approx(0.5 * moment(pure, 4)).epsilon(1e-12));
}

TEST_CASE("fisher report for the oscillator saturates Cramer-Rao") {
    const auto report = fisher_report(build_quartic(1.0, 0.0));
    CHECK(report.cr_product == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(report.discrepancy <= 1e-9);
    REQUIRE(report.moments.size() == 1);
    CHECK(report.moments[0].power == 2);
}

TEST_CASE("fisher report reproduces the quartic benchmark products") {
    CHECK(fisher_report(build_quartic(1.0, 1.0)).cr_product ==
          doctest::Approx(1.046344179).epsilon(5e-7 / 1.0463));
    CHECK(fisher_report(build_quartic(1.0, 10.0)).cr_product ==
          doctest::Approx(1.099588057).epsilon(5e-7 / 1.0996));
    CHECK(fisher_report(build_quartic(1.0, 1000.0)).cr_product ==
          doctest::Approx(1.130099216).epsilon(5e-7 / 1.1301));
}

TEST_CASE("pure quartic frozen values") {
    // high-precision quadrature of exp(-2 sqrt(2)/3 |x|^3)/Z
    const auto aw = build_quartic(0.0, 1.0);
    CHECK(moment(aw, 2) == doctest::Approx(0.38822910568921).epsilon(1e-9));
    CHECK(moment(aw, 4) == doctest::Approx(0.364505566473613).epsilon(1e-9));
    const auto report = fisher_report(aw);
    CHECK(report.fisher_virial == doctest::Approx(2.91604453178891).epsilon(1e-9));
    CHECK(report.cr_product == doctest::Approx(1.13209336072632).epsilon(1e-9));
}

TEST_CASE("moments beyond the potential degree still converge") {
    // Gaussian: <x^6> = 15 <x^2>^3
    const auto ho = build_quartic(1.0, 0.0);
    CHECK(moment(ho, 6) == doctest::Approx(15.0 / 8.0).epsilon(1e-9));

    const auto general = AnsatzWavefunction::build(
        EvenPolynomialPotential::validate({{2, 0.3}, {6, 0.2}}));
    const double R = 1.5 * general.truncation_radius();
    const double oracle = testutil::trapezoid(
        [&](double x) { return x * x * x * x * x * x * x * x * general.pdf(x); }, -R, R,
        2000001);
    CHECK(moment(general, 8) == doctest::Approx(oracle).epsilon(1e-8));
}

TEST_CASE("confinement shrinks the second moment") {
    double prev = moment(build_quartic(1.0, 0.0), 2);
    for (const double lambda :
         {1e-3, 1e-2, 0.1, 0.5, 1.0, 5.0, 10.0, 100.0, 500.0, 1000.0}) {
        const double m2 = moment(build_quartic(1.0, lambda), 2);
        CHECK(m2 < prev);
        prev = m2;
    }
}

TEST_CASE("Cramer-Rao bound holds with equality only for the oscillator") {
    testutil::Rng rng(6021);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<PotentialTerm> terms;
        for (int degree = 2; degree <= 8; degree += 2)
            if (rng.coin()) terms.push_back({degree, rng.uniform(0.05, 10.0)});
        if (terms.empty()) terms.push_back({4, 1.0});
        const auto aw = AnsatzWavefunction::build(EvenPolynomialPotential::validate(terms));
        CHECK(fisher_report(aw).cr_product >= 1.0 - 1e-9);
    }
    CHECK(std::abs(fisher_report(build_quartic(1.7, 0.0)).cr_product - 1.0) <= 1e-9);
    CHECK(fisher_report(build_quartic(1.0, 0.01)).cr_product > 1.0 + 1e-4);
}
