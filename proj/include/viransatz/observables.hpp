#pragma once

#include <vector>

#include "viransatz/ansatz.hpp"

namespace viransatz {

/// Fisher information of the ansatz PDF by two independent routes, the even
/// moments, and the Cramer-Rao product I <x^2> (virial-route I). The route
/// discrepancy is a built-in numerical health check: the two integrals are
/// analytically identical for this ansatz.
struct FisherReport {
    double fisher_gradient = 0.0;     // 4 Int (d psi/dx)^2
    double fisher_virial = 0.0;       // 4 <x U'> = 8 sum_k k a_{2k} <x^{2k}>
    std::vector<PowerValue> moments;  // even powers 2..max degree
    double cr_product = 0.0;          // fisher_virial * <x^2>
    double discrepancy = 0.0;         // |fisher_gradient - fisher_virial|
};

/// <x^p> over the ansatz PDF. Exactly 0 for odd p; the truncation radius is
/// re-derived per power so the x^p tail weight stays below round-off.
double moment(const AnsatzWavefunction& aw, int power);

/// I = 4 Int (d psi/dx)^2 dx, with the analytic derivative dS/dx.
double fisher_information_gradient(const AnsatzWavefunction& aw);

/// I = 4 <x U'> = 8 sum_k k a_{2k} <x^{2k}>, consuming only even moments.
double fisher_information_virial(const AnsatzWavefunction& aw);

/// <U> = sum_k a_{2k} <x^{2k}>
double potential_expectation(const AnsatzWavefunction& aw);

FisherReport fisher_report(const AnsatzWavefunction& aw);

}  // namespace viransatz
