#include "viransatz/energy.hpp"

#include <algorithm>
#include <cmath>

namespace viransatz {

double energy_schrodinger(const AnsatzWavefunction& aw) {
    return fisher_information_gradient(aw) / 8.0 + potential_expectation(aw);
}

double energy_schrodinger_quartic_integrand(double omega, double lambda,
                                            const AnsatzWavefunction& aw) {
    if (omega == 0.0)
        throw ValidationError(ErrorCode::DomainError,
                              "the explicit quartic integrand requires omega > 0");
    if (!(omega > 0.0) || lambda < 0.0)
        throw ValidationError(ErrorCode::BadInput, "requires omega > 0 and lambda >= 0");
    const auto& p = aw.potential();
    if (std::abs(p.coefficient(2) - 0.5 * omega * omega) > 1e-12 ||
        std::abs(p.coefficient(4) - 0.5 * lambda) > 1e-12 || p.max_degree() > 4)
        throw ValidationError(ErrorCode::BadInput,
                              "ansatz was not built for this (omega, lambda) quartic");

    const double c = 2.0 * lambda / (omega * omega);
    const auto integrand = [&](double x) {
        const double x2 = x * x;
        const double root = std::sqrt(1.0 + c * x2);
        return (0.5 * omega * root + (lambda / omega) * x2 / root -
                0.5 * lambda * x2 * x2) *
               aw.pdf(x);
    };
    const double R = find_truncation_radius(
        [&](double x) { return aw.exponent(x) - 2.0 * std::log(std::max(x, 1.0)); }, 350.0);
    return integrate_even(integrand, R, aw.quadrature()).value;
}

double energy_fisher(const AnsatzWavefunction& aw) {
    double e = 0.0;
    for (const auto& t : aw.potential().terms())  // (k + 1) a_{2k} <x^{2k}>
        e += (0.5 * t.degree + 1.0) * t.coefficient * moment(aw, t.degree);
    return e;
}

EnergyReport energy_report(const EvenPolynomialPotential& p, const QuadratureConfig& cfg,
                           bool with_reference, const ReferenceOptions& ref) {
    const AnsatzWavefunction aw = AnsatzWavefunction::build(p, cfg);
    EnergyReport report;
    report.e_schrodinger = energy_schrodinger(aw);
    report.e_fisher = energy_fisher(aw);
    report.procedures_discrepancy = std::abs(report.e_schrodinger - report.e_fisher);
    if (with_reference) {
        report.e_reference = reference_energy(p, report.e_fisher, ref);
        report.gap_ansatz_vs_reference = report.e_fisher - *report.e_reference;
    }
    return report;
}

}  // namespace viransatz
