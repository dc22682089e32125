#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "viransatz/errors.hpp"

namespace viransatz {

/// One monomial of an even polynomial: coefficient * x^degree.
struct PotentialTerm {
    int degree = 0;              // even, positive
    double coefficient = 0.0;    // energy units per length^degree

    bool operator==(const PotentialTerm&) const = default;
};

/// Generic (power, value) pair used for moments, multipliers and reference
/// constants indexed by the power of x they belong to.
struct PowerValue {
    int power = 0;
    double value = 0.0;
};

/// Confining even polynomial potential U(x) = sum_k a_{2k} x^{2k}.
///
/// Instances are immutable and canonical: terms sorted ascending by degree,
/// degrees even, positive and distinct, highest coefficient > 0, zero
/// coefficients dropped, and sum_k 8k a_{2k} x^{2k} >= 0 everywhere.
/// All evaluation is done in the variable u = x^2 (Horner), so values are
/// exactly even in x. Pure, re-entrant, safe for concurrent use.
class EvenPolynomialPotential {
public:
    /// Canonicalize and check the invariants; throws ValidationError with
    /// OddDegree, NoConfinement or NegativeRadicand on violation.
    static EvenPolynomialPotential validate(std::vector<PotentialTerm> raw);

    /// U = omega^2/2 x^2 + lambda/2 x^4. Requires omega > 0, or omega == 0
    /// with lambda > 0. Zero-coefficient terms are dropped.
    static EvenPolynomialPotential quartic(double omega, double lambda);

    /// U(x)
    double value(double x) const;

    /// x dU/dx = sum_k 2k a_{2k} x^{2k}
    double virial_integrand(double x) const;

    /// sum_k 8k a_{2k} x^{2k} = 4 x dU/dx, the quantity under the square
    /// root in the ground-state ansatz exponent. Nonnegative by validation.
    double radicand(double x) const;

    const std::vector<PotentialTerm>& terms() const { return terms_; }
    int max_degree() const { return terms_.back().degree; }

    /// Coefficient of x^degree, 0 when the term is absent.
    double coefficient(int degree) const;

    /// (omega, lambda) when the degrees are a subset of {2, 4}.
    std::optional<std::pair<double, double>> quartic_shape() const;

    bool operator==(const EvenPolynomialPotential&) const = default;

private:
    EvenPolynomialPotential() = default;

    std::vector<PotentialTerm> terms_;
    std::vector<double> u_coeffs_;       // a_k indexed by k = degree/2
    std::vector<double> virial_coeffs_;  // 2k a_k indexed by k
};

}  // namespace viransatz
