#pragma once

#include <optional>

#include "viransatz/observables.hpp"
#include "viransatz/reference_solver.hpp"

namespace viransatz {

/// Ground-state energy of the ansatz by the two procedures, plus the
/// numerical reference eigenvalue when requested. The two procedures are
/// analytically equal; their discrepancy is a quadrature health check.
struct EnergyReport {
    double e_schrodinger = 0.0;
    double e_fisher = 0.0;
    std::optional<double> e_reference;
    std::optional<double> gap_ansatz_vs_reference;  // e_fisher - e_reference
    double procedures_discrepancy = 0.0;            // |e_schrodinger - e_fisher|
};

/// E = <T> + <U> with the kinetic term from the gradient-route Fisher
/// information, <T> = I/8.
double energy_schrodinger(const AnsatzWavefunction& aw);

/// Regression guard on the explicit quartic expectation-value integrand
/// (omega/2)(1 + 2 lambda x^2/omega^2)^{1/2}
///   + (lambda/omega) x^2 (1 + 2 lambda x^2/omega^2)^{-1/2}
///   - (lambda/2) x^4,
/// integrated against psi^2. Requires omega > 0 and aw built for this
/// (omega, lambda) quartic; equals energy_schrodinger within 1e-8.
double energy_schrodinger_quartic_integrand(double omega, double lambda,
                                            const AnsatzWavefunction& aw);

/// E = sum_k (k+1) a_{2k} <x^{2k}>, i.e. alpha/8 from the multiplier
/// structure, with no Schrodinger equation involved.
double energy_fisher(const AnsatzWavefunction& aw);

/// Builds the ansatz, runs both procedures and (optionally) the reference
/// eigensolver seeded with e_fisher as the domain hint.
EnergyReport energy_report(const EvenPolynomialPotential& p, const QuadratureConfig& cfg = {},
                           bool with_reference = true, const ReferenceOptions& ref = {});

}  // namespace viransatz
