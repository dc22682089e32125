#pragma once

#include <functional>
#include <vector>

#include "viransatz/observables.hpp"

namespace viransatz {

/// Multiplier / moment representation of the Fisher-Legendre structure:
/// alpha = I - sum_k lambda_k <x^k> with lambda_{2k} = -8 a_{2k}, so that
/// alpha/8 is the Fisher-procedure energy.
struct LegendreState {
    std::vector<PowerValue> multipliers;  // (2k, lambda_{2k})
    double alpha = 0.0;
    std::vector<PowerValue> moments;  // (2k, <x^{2k}>) for the potential terms
    double fisher = 0.0;              // virial-route I
};

/// lambda_{2k} = -8 a_{2k}, one multiplier per potential term.
std::vector<PowerValue> multipliers_from_potential(const EvenPolynomialPotential& p);

LegendreState legendre_state(const AnsatzWavefunction& aw);

/// Closed-form solution of the Fisher PDE: I = sum_k C_k |<x^k>|^{-2/k},
/// with positive constants C_k and nonzero moments (matching index sets).
double fim_pde_solution(const std::vector<PowerValue>& constants,
                        const std::vector<PowerValue>& moments);

/// Residual of I + sum_k (k/2) <x^k> dI/d<x^k> for an arbitrary I(moments),
/// with central-difference derivatives (relative step, absolute floor 1e-8).
/// Vanishes to O(step^2) exactly when I solves the Fisher PDE.
double fim_pde_residual(const std::function<double(const std::vector<PowerValue>&)>& fim,
                        const std::vector<PowerValue>& moments, double step);

/// Residual of the closed-form solution built from the given constants.
double fim_pde_residual(const std::vector<PowerValue>& constants,
                        const std::vector<PowerValue>& moments, double step);

/// lambda_k = dI/d<x^k> = -(2/k) C_k <x^k>^{-(2+k)/k} < 0, for positive
/// moments.
std::vector<PowerValue> multipliers_from_fim(const std::vector<PowerValue>& constants,
                                             const std::vector<PowerValue>& moments);

struct ReciprocityCheck {
    double lhs = 0.0;  // d alpha / d lambda_2 by central differences
    double rhs = 0.0;  // -<x^2>
    double gap = 0.0;
};

/// Checks d alpha / d lambda_k = -<x^k> on the harmonic-oscillator closed
/// forms alpha(lambda_2) = 2 sqrt(-lambda_2), lambda_2 = -4 omega^2,
/// <x^2> = 1/(2 omega).
ReciprocityCheck reciprocity_check_harmonic(double omega, double step = 1e-5);

}  // namespace viransatz
