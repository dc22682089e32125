#pragma once

#include <optional>
#include <vector>

#include "viransatz/potential.hpp"
#include "viransatz/quadrature.hpp"

namespace viransatz {

enum class ExponentMode {
    ClosedHarmonic,     // S = omega x^2 / 2
    ClosedQuartic,      // S = (omega^3/6 lambda)[(1 + 2 lambda x^2/omega^2)^{3/2} - 1]
    ClosedPureQuartic,  // S = (2/3) sqrt(a4) |x|^3
    GeneralQuadrature,  // S by quadrature of sqrt(x U'(x))
};

/// Ansatz exponent S(x) = (1/2) Int_0^|x| sqrt(sum_k 8k a_{2k} t^{2k}) dt,
/// evaluated by quadrature. S(0) = 0, even, nondecreasing in |x|.
double exponent_S(const EvenPolynomialPotential& p, double x, const QuadratureConfig& cfg = {});

/// Closed form of the exponent for U = omega^2/2 x^2 + lambda/2 x^4 with
/// omega, lambda > 0. Uses a series branch for 2 lambda x^2/omega^2 < 1e-8
/// to avoid cancellation; reduces to omega x^2/2 as lambda -> 0.
double exponent_S_closed_quartic(double omega, double lambda, double x);

/// Parameter-free normalized ground-state ansatz psi = N exp(-S(|x|)) for a
/// confining even polynomial potential; pdf = psi^2 integrates to 1.
///
/// Immutable after build; pointwise evaluation is pure and safe for
/// concurrent use. build itself is single-threaded per call.
class AnsatzWavefunction {
public:
    /// Builds the ansatz: picks the fastest exact exponent mode (closed
    /// forms for harmonic / quartic / pure-quartic shapes, else quadrature
    /// backed by a cumulative table), finds the truncation radius with
    /// S(R) >= 350, and normalizes so that Int psi^2 = 1.
    /// mode_override forces an evaluation strategy (testing hook).
    static AnsatzWavefunction build(const EvenPolynomialPotential& p,
                                    const QuadratureConfig& cfg = {},
                                    std::optional<ExponentMode> mode_override = {});

    double exponent(double x) const;             // S(|x|)
    double exponent_derivative(double x) const;  // dS/dx = sign(x) sqrt(x U'(x))
    double psi(double x) const;                  // N exp(-S(|x|))
    double pdf(double x) const;                  // psi(x)^2

    const EvenPolynomialPotential& potential() const { return potential_; }
    const QuadratureConfig& quadrature() const { return quadrature_; }
    ExponentMode exponent_mode() const { return mode_; }
    double norm_constant() const { return norm_constant_; }
    double truncation_radius() const { return truncation_radius_; }

private:
    AnsatzWavefunction(EvenPolynomialPotential p, QuadratureConfig cfg)
        : potential_(std::move(p)), quadrature_(cfg) {}

    double exponent_abs(double ax) const;  // S at ax >= 0
    void build_exponent_table();

    EvenPolynomialPotential potential_;
    QuadratureConfig quadrature_;
    ExponentMode mode_ = ExponentMode::GeneralQuadrature;
    double omega_ = 0.0;   // closed harmonic / quartic parameter
    double lambda_ = 0.0;  // closed quartic parameter
    double a4_ = 0.0;      // closed pure-quartic coefficient
    double norm_constant_ = 1.0;
    double truncation_radius_ = 0.0;

    // cumulative exponent table for GeneralQuadrature: S at uniform nodes,
    // interpolated with cubic Hermite cells (the derivative is analytic)
    std::vector<double> table_s_;
    double table_step_ = 0.0;
    double table_end_ = 0.0;
};

}  // namespace viransatz
