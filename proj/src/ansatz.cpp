#include "viransatz/ansatz.hpp"

#include <algorithm>
#include <cmath>

namespace viransatz {

namespace {

// integrand of the exponent: sqrt(x U'(x)), clamped against sub-epsilon
// negative rounding noise (validation guarantees x U' >= 0)
double exponent_integrand(const EvenPolynomialPotential& p, double t) {
    return std::sqrt(std::max(p.virial_integrand(t), 0.0));
}

}  // namespace

double exponent_S(const EvenPolynomialPotential& p, double x, const QuadratureConfig& cfg) {
    const double ax = std::abs(x);
    if (ax == 0.0) return 0.0;
    return integrate([&](double t) { return exponent_integrand(p, t); }, 0.0, ax, cfg).value;
}

double exponent_S_closed_quartic(double omega, double lambda, double x) {
    if (!(omega > 0.0) || !(lambda > 0.0))
        throw ValidationError(ErrorCode::BadInput,
                              "closed quartic exponent requires omega > 0 and lambda > 0");
    const double z = 2.0 * lambda * x * x / (omega * omega);
    if (z < 1e-8) {
        // (1+z)^{3/2} - 1 = z (3/2 + 3/8 z - 1/16 z^2 + ...)
        return (omega * x * x / 3.0) * (1.5 + z * (0.375 - 0.0625 * z));
    }
    return omega * omega * omega / (6.0 * lambda) * (std::pow(1.0 + z, 1.5) - 1.0);
}

AnsatzWavefunction AnsatzWavefunction::build(const EvenPolynomialPotential& p,
                                             const QuadratureConfig& cfg,
                                             std::optional<ExponentMode> mode_override) {
    cfg.validate();
    AnsatzWavefunction aw(p, cfg);

    const auto& terms = p.terms();
    if (terms.size() == 1 && terms[0].degree == 2) {
        aw.mode_ = ExponentMode::ClosedHarmonic;
        aw.omega_ = std::sqrt(2.0 * terms[0].coefficient);
    } else if (terms.size() == 1 && terms[0].degree == 4) {
        aw.mode_ = ExponentMode::ClosedPureQuartic;
        aw.a4_ = terms[0].coefficient;
    } else if (terms.size() == 2 && terms[0].degree == 2 && terms[1].degree == 4 &&
               terms[0].coefficient > 0.0) {
        aw.mode_ = ExponentMode::ClosedQuartic;
        aw.omega_ = std::sqrt(2.0 * terms[0].coefficient);
        aw.lambda_ = 2.0 * terms[1].coefficient;
    } else {
        aw.mode_ = ExponentMode::GeneralQuadrature;
    }
    if (mode_override) {
        if (*mode_override != ExponentMode::GeneralQuadrature && *mode_override != aw.mode_)
            throw ValidationError(ErrorCode::BadInput,
                                  "mode override does not match the potential shape");
        aw.mode_ = *mode_override;
    }

    if (aw.mode_ == ExponentMode::GeneralQuadrature) aw.build_exponent_table();

    aw.truncation_radius_ =
        find_truncation_radius([&](double x) { return aw.exponent_abs(x); }, 350.0);

    const double norm_integral =
        integrate_even([&](double x) { return std::exp(-2.0 * aw.exponent_abs(x)); },
                       aw.truncation_radius_, cfg)
            .value;
    aw.norm_constant_ = 1.0 / std::sqrt(norm_integral);
    return aw;
}

void AnsatzWavefunction::build_exponent_table() {
    // Cover every integral downstream needs: moments weight the tail by
    // x^p with p up to the potential degree, which shifts the effective
    // exponent by (p/2) ln x.
    const double half_max_degree = 0.5 * potential_.max_degree();
    const auto s_direct = [&](double x) { return exponent_S(potential_, x, quadrature_); };
    table_end_ = find_truncation_radius(
        [&](double x) {
            return s_direct(x) - half_max_degree * std::log(std::max(x, 1.0));
        },
        350.0);

    constexpr int kCells = 4096;
    table_step_ = table_end_ / kCells;
    table_s_.assign(kCells + 1, 0.0);

    QuadratureConfig cell_cfg = quadrature_;
    cell_cfg.abs_tol = quadrature_.abs_tol / 16.0;

    double sum = 0.0, carry = 0.0;  // Kahan accumulation of cell integrals
    for (int j = 0; j < kCells; ++j) {
        const double a = j * table_step_;
        const double b = (j + 1) * table_step_;
        const double cell =
            integrate([&](double t) { return exponent_integrand(potential_, t); }, a, b, cell_cfg)
                .value;
        const double y = cell - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
        table_s_[j + 1] = sum;
    }
}

double AnsatzWavefunction::exponent_abs(double ax) const {
    switch (mode_) {
        case ExponentMode::ClosedHarmonic:
            return 0.5 * omega_ * ax * ax;
        case ExponentMode::ClosedQuartic:
            return exponent_S_closed_quartic(omega_, lambda_, ax);
        case ExponentMode::ClosedPureQuartic:
            return (2.0 / 3.0) * std::sqrt(a4_) * ax * ax * ax;
        case ExponentMode::GeneralQuadrature:
            break;
    }
    if (ax >= table_end_) {
        if (ax == table_end_) return table_s_.back();
        return table_s_.back() +
               integrate([&](double t) { return exponent_integrand(potential_, t); }, table_end_,
                         ax, quadrature_)
                   .value;
    }
    const int j = std::min(static_cast<int>(ax / table_step_),
                           static_cast<int>(table_s_.size()) - 2);
    const double x0 = j * table_step_;
    const double t = (ax - x0) / table_step_;
    const double d0 = exponent_integrand(potential_, x0);
    const double d1 = exponent_integrand(potential_, x0 + table_step_);
    const double h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
    const double h10 = t * (1.0 - t) * (1.0 - t);
    const double h01 = t * t * (3.0 - 2.0 * t);
    const double h11 = t * t * (t - 1.0);
    return h00 * table_s_[j] + h01 * table_s_[j + 1] +
           table_step_ * (h10 * d0 + h11 * d1);
}

double AnsatzWavefunction::exponent(double x) const { return exponent_abs(std::abs(x)); }

double AnsatzWavefunction::exponent_derivative(double x) const {
    const double d = 0.5 * std::sqrt(std::max(potential_.radicand(x), 0.0));
    return x < 0.0 ? -d : d;
}

double AnsatzWavefunction::psi(double x) const {
    return norm_constant_ * std::exp(-exponent_abs(std::abs(x)));
}

double AnsatzWavefunction::pdf(double x) const {
    const double v = psi(x);
    return v * v;
}

}  // namespace viransatz
