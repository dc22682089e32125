#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "viransatz/potential.hpp"

namespace viransatz {

/// Symmetric uniform grid over [-half_width, half_width] with Dirichlet
/// walls; points must be odd so that x = 0 is a node.
struct GridSpec {
    GridSpec(double half_width, int points);

    double half_width;
    int points;
    double spacing() const { return 2.0 * half_width / (points - 1); }
};

/// Grid ground state sampled on the full grid (walls included, psi = 0
/// there), normalized so that sum psi_i^2 h = 1, with psi(0) > 0.
struct SampledWavefunction {
    std::vector<double> x;
    std::vector<double> psi;
    double energy = 0.0;  // single-grid eigenvalue used for the solve
};

/// Smallest half-width on a doubling search with U(L) >= 10 e_hint + 50.
double choose_domain(const EvenPolynomialPotential& p, double e_hint);

/// Number of eigenvalues of the Dirichlet discretization below sigma
/// (Sturm sequence count). Monotone nondecreasing in sigma.
int sturm_count_below(const EvenPolynomialPotential& p, const GridSpec& grid, double sigma);

/// Smallest eigenvalue of -1/2 d^2/dx^2 + U on one grid, by Sturm bisection.
double grid_eigenvalue(const EvenPolynomialPotential& p, const GridSpec& grid);

/// Ground-state energy with one Richardson level, E = (4 E_{h/2} - E_h)/3;
/// escalates the grid to 65537 points when |E_h - E_{h/2}| > 1e-6.
double ground_state_energy(const EvenPolynomialPotential& p, const GridSpec& grid);

/// Ground-state eigenvector by inverse iteration seeded with a Gaussian.
/// Throws DomainTooSmall when the amplitude at the walls exceeds 1e-12.
SampledWavefunction ground_state_wavefunction(const EvenPolynomialPotential& p,
                                              const GridSpec& grid);

/// Grid inner product of the sampled state with a continuum wavefunction f,
/// with f normalized on the same grid.
double overlap(const SampledWavefunction& w, const std::function<double(double)>& f);

struct ReferenceOptions {
    int points = 16385;
    std::optional<double> half_width;  // override; adequacy still checked
};

/// Domain selection + Richardson solve + post-solve adequacy recheck
/// (U(L) >= 10 E + 50, doubling L as needed when the domain was chosen
/// automatically).
double reference_energy(const EvenPolynomialPotential& p, double e_hint,
                        const ReferenceOptions& opts = {});

}  // namespace viransatz
