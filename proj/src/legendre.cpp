#include "viransatz/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace viransatz {

namespace {

void check_matching_sets(const std::vector<PowerValue>& constants,
                         const std::vector<PowerValue>& moments) {
    if (constants.size() != moments.size())
        throw ValidationError(ErrorCode::BadInput, "constants and moments index sets differ");
    for (size_t i = 0; i < constants.size(); ++i) {
        if (constants[i].power != moments[i].power)
            throw ValidationError(ErrorCode::BadInput,
                                  "constants and moments index sets differ");
        if (constants[i].power <= 0)
            throw ValidationError(ErrorCode::BadInput, "powers must be positive");
        if (!(constants[i].value > 0.0))
            throw ValidationError(ErrorCode::BadInput, "reference constants must be positive");
    }
}

double fd_step(double value, double step) { return std::max(step * std::abs(value), 1e-8); }

}  // namespace

std::vector<PowerValue> multipliers_from_potential(const EvenPolynomialPotential& p) {
    std::vector<PowerValue> out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) out.push_back({t.degree, -8.0 * t.coefficient});
    return out;
}

LegendreState legendre_state(const AnsatzWavefunction& aw) {
    LegendreState st;
    st.multipliers = multipliers_from_potential(aw.potential());
    for (const auto& t : aw.potential().terms())
        st.moments.push_back({t.degree, moment(aw, t.degree)});

    st.fisher = 0.0;
    for (size_t i = 0; i < st.moments.size(); ++i)
        st.fisher += 4.0 * st.moments[i].power * aw.potential().terms()[i].coefficient *
                     st.moments[i].value;

    st.alpha = st.fisher;
    for (size_t i = 0; i < st.moments.size(); ++i)
        st.alpha -= st.multipliers[i].value * st.moments[i].value;
    return st;
}

double fim_pde_solution(const std::vector<PowerValue>& constants,
                        const std::vector<PowerValue>& moments) {
    check_matching_sets(constants, moments);
    double I = 0.0;
    for (size_t i = 0; i < constants.size(); ++i) {
        if (moments[i].value == 0.0)
            throw ValidationError(ErrorCode::ZeroMoment,
                                  "moment of power " + std::to_string(moments[i].power) +
                                      " is zero");
        I += constants[i].value *
             std::pow(std::abs(moments[i].value), -2.0 / moments[i].power);
    }
    return I;
}

double fim_pde_residual(const std::function<double(const std::vector<PowerValue>&)>& fim,
                        const std::vector<PowerValue>& moments, double step) {
    if (!(step > 0.0))
        throw ValidationError(ErrorCode::BadInput, "finite-difference step must be positive");
    double residual = fim(moments);
    for (size_t i = 0; i < moments.size(); ++i) {
        const double h = fd_step(moments[i].value, step);
        std::vector<PowerValue> plus = moments, minus = moments;
        plus[i].value += h;
        minus[i].value -= h;
        const double dI = (fim(plus) - fim(minus)) / (2.0 * h);
        residual += 0.5 * moments[i].power * moments[i].value * dI;
    }
    return residual;
}

double fim_pde_residual(const std::vector<PowerValue>& constants,
                        const std::vector<PowerValue>& moments, double step) {
    check_matching_sets(constants, moments);
    return fim_pde_residual(
        [&](const std::vector<PowerValue>& m) { return fim_pde_solution(constants, m); },
        moments, step);
}

std::vector<PowerValue> multipliers_from_fim(const std::vector<PowerValue>& constants,
                                             const std::vector<PowerValue>& moments) {
    check_matching_sets(constants, moments);
    std::vector<PowerValue> out;
    out.reserve(constants.size());
    for (size_t i = 0; i < constants.size(); ++i) {
        const double m = moments[i].value;
        if (!(m > 0.0))
            throw ValidationError(ErrorCode::NonPositiveMoment,
                                  "moment of power " + std::to_string(moments[i].power) +
                                      " must be positive");
        const double k = moments[i].power;
        out.push_back({moments[i].power,
                       -(2.0 / k) * constants[i].value * std::pow(m, -(2.0 + k) / k)});
    }
    return out;
}

ReciprocityCheck reciprocity_check_harmonic(double omega, double step) {
    if (!(omega > 0.0) || !(step > 0.0))
        throw ValidationError(ErrorCode::BadInput, "requires omega > 0 and step > 0");
    const double lambda2 = -4.0 * omega * omega;
    const double h = fd_step(lambda2, step);
    if (h >= -lambda2)
        throw ValidationError(ErrorCode::BadInput, "step too large: lambda_2 + h crosses 0");

    const auto alpha = [](double l) { return 2.0 * std::sqrt(-l); };
    ReciprocityCheck check;
    check.lhs = (alpha(lambda2 + h) - alpha(lambda2 - h)) / (2.0 * h);
    check.rhs = -1.0 / (2.0 * omega);
    check.gap = std::abs(check.lhs - check.rhs);
    return check;
}

}  // namespace viransatz
