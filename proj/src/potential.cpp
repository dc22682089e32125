#include "viransatz/potential.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace viransatz {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::OddDegree: return "OddDegree";
        case ErrorCode::NoConfinement: return "NoConfinement";
        case ErrorCode::NegativeRadicand: return "NegativeRadicand";
        case ErrorCode::BadInput: return "BadInput";
        case ErrorCode::NonFiniteIntegrand: return "NonFiniteIntegrand";
        case ErrorCode::BracketFailure: return "BracketFailure";
        case ErrorCode::ZeroMoment: return "ZeroMoment";
        case ErrorCode::NonPositiveMoment: return "NonPositiveMoment";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::DomainTooSmall: return "DomainTooSmall";
        case ErrorCode::DomainError: return "DomainError";
    }
    return "UnknownError";
}

namespace {

double horner(const std::vector<double>& coeffs, double u) {
    double r = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * u + *it;
    return r;
}

// Nonnegativity of v(u) = sum_k 2k a_k u^k on u >= 0 for mixed-sign
// coefficients: sample a log-spaced grid up to the Cauchy root bound, and
// refine every sign change of v' to locate interior minima exactly.
bool virial_poly_nonnegative(const std::vector<double>& v_coeffs) {
    const int K = static_cast<int>(v_coeffs.size()) - 1;
    std::vector<double> dv(K);  // v'(u)
    for (int k = 1; k <= K; ++k) dv[k - 1] = v_coeffs[k] * k;

    const double lead = v_coeffs[K];
    double u_max = 1.0;
    for (int k = 0; k < K; ++k) u_max = std::max(u_max, 1.0 + std::abs(v_coeffs[k]) / lead);

    const auto v = [&](double u) { return horner(v_coeffs, u); };
    const auto vp = [&](double u) { return horner(dv, u); };

    constexpr int kSamples = 256;
    const double lo = 1e-8;
    const double ratio = std::pow(u_max / lo, 1.0 / (kSamples - 1));
    double prev_u = lo;
    double prev_vp = vp(lo);
    if (v(lo) < 0.0) return false;
    for (int i = 1; i < kSamples; ++i) {
        const double u = lo * std::pow(ratio, i);
        if (v(u) < 0.0) return false;
        const double cur_vp = vp(u);
        if (prev_vp < 0.0 && cur_vp >= 0.0) {
            // bracketed minimum of v; bisect v' to the critical point
            double a = prev_u, b = u;
            for (int it = 0; it < 100; ++it) {
                const double m = 0.5 * (a + b);
                if (vp(m) < 0.0) a = m;
                else b = m;
            }
            if (v(0.5 * (a + b)) < 0.0) return false;
        }
        prev_u = u;
        prev_vp = cur_vp;
    }
    return true;
}

}  // namespace

EvenPolynomialPotential EvenPolynomialPotential::validate(std::vector<PotentialTerm> raw) {
    for (const auto& t : raw) {
        if (t.degree <= 0 || t.degree % 2 != 0)
            throw ValidationError(ErrorCode::OddDegree,
                                  "degree " + std::to_string(t.degree) +
                                      " is not a positive even integer");
        if (!std::isfinite(t.coefficient))
            throw ValidationError(ErrorCode::BadInput, "non-finite coefficient");
    }

    std::sort(raw.begin(), raw.end(),
              [](const PotentialTerm& a, const PotentialTerm& b) { return a.degree < b.degree; });

    // merge duplicate degrees, drop zero coefficients
    std::vector<PotentialTerm> terms;
    for (const auto& t : raw) {
        if (!terms.empty() && terms.back().degree == t.degree)
            terms.back().coefficient += t.coefficient;
        else
            terms.push_back(t);
    }
    std::erase_if(terms, [](const PotentialTerm& t) { return t.coefficient == 0.0; });

    if (terms.empty())
        throw ValidationError(ErrorCode::NoConfinement, "potential has no nonzero term");
    if (terms.back().coefficient <= 0.0)
        throw ValidationError(ErrorCode::NoConfinement,
                              "highest-degree coefficient must be positive");

    EvenPolynomialPotential p;
    p.terms_ = std::move(terms);
    const int K = p.terms_.back().degree / 2;
    p.u_coeffs_.assign(K + 1, 0.0);
    p.virial_coeffs_.assign(K + 1, 0.0);
    for (const auto& t : p.terms_) {
        const int k = t.degree / 2;
        p.u_coeffs_[k] = t.coefficient;
        p.virial_coeffs_[k] = 2.0 * k * t.coefficient;
    }

    const bool all_nonnegative =
        std::all_of(p.terms_.begin(), p.terms_.end(),
                    [](const PotentialTerm& t) { return t.coefficient >= 0.0; });
    if (!all_nonnegative && !virial_poly_nonnegative(p.virial_coeffs_))
        throw ValidationError(ErrorCode::NegativeRadicand,
                              "sum_k 8k a_{2k} x^{2k} is negative somewhere; "
                              "the ansatz square root is undefined");
    return p;
}

EvenPolynomialPotential EvenPolynomialPotential::quartic(double omega, double lambda) {
    if (!std::isfinite(omega) || !std::isfinite(lambda) || omega < 0.0 || lambda < 0.0)
        throw ValidationError(ErrorCode::BadInput,
                              "quartic potential requires omega >= 0 and lambda >= 0");
    if (omega == 0.0 && lambda == 0.0)
        throw ValidationError(ErrorCode::NoConfinement, "omega = lambda = 0 does not confine");
    return validate({{2, 0.5 * omega * omega}, {4, 0.5 * lambda}});
}

double EvenPolynomialPotential::value(double x) const { return horner(u_coeffs_, x * x); }

double EvenPolynomialPotential::virial_integrand(double x) const {
    return horner(virial_coeffs_, x * x);
}

double EvenPolynomialPotential::radicand(double x) const {
    // exactly 4 * virial_integrand: scaling by a power of two commutes with
    // rounding, which makes the radicand = 4 x U' identity bit-exact
    return 4.0 * horner(virial_coeffs_, x * x);
}

double EvenPolynomialPotential::coefficient(int degree) const {
    for (const auto& t : terms_)
        if (t.degree == degree) return t.coefficient;
    return 0.0;
}

std::optional<std::pair<double, double>> EvenPolynomialPotential::quartic_shape() const {
    for (const auto& t : terms_)
        if (t.degree != 2 && t.degree != 4) return std::nullopt;
    const double a2 = coefficient(2);
    if (a2 < 0.0) return std::nullopt;
    return std::make_pair(std::sqrt(2.0 * a2), 2.0 * coefficient(4));
}

}  // namespace viransatz
