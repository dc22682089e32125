#include "viransatz/observables.hpp"

#include <algorithm>
#include <cmath>

namespace viransatz {

namespace {

double even_power(double x, int power) {  // x^power for even power, exactly even in x
    double r = 1.0;
    const double u = x * x;
    for (int k = 0; k < power / 2; ++k) r *= u;
    return r;
}

// radius beyond which x^p pdf(x) < exp(-700) * x-free scale
double weighted_radius(const AnsatzWavefunction& aw, int power) {
    const double half_p = 0.5 * power;
    return find_truncation_radius(
        [&](double x) { return aw.exponent(x) - half_p * std::log(std::max(x, 1.0)); }, 350.0);
}

}  // namespace

double moment(const AnsatzWavefunction& aw, int power) {
    if (power < 0)
        throw ValidationError(ErrorCode::BadInput, "moment power must be nonnegative");
    if (power % 2 == 1) return 0.0;  // odd moment of an even PDF
    const double R = weighted_radius(aw, power);
    return integrate_even([&](double x) { return even_power(x, power) * aw.pdf(x); }, R,
                          aw.quadrature())
        .value;
}

double fisher_information_gradient(const AnsatzWavefunction& aw) {
    const double R = weighted_radius(aw, aw.potential().max_degree());
    return integrate_even(
               [&](double x) {
                   const double d = aw.exponent_derivative(x);
                   return 4.0 * d * d * aw.pdf(x);
               },
               R, aw.quadrature())
        .value;
}

double fisher_information_virial(const AnsatzWavefunction& aw) {
    double sum = 0.0;
    for (const auto& t : aw.potential().terms())  // 8 k a_{2k} = 4 degree a_{2k}
        sum += 4.0 * t.degree * t.coefficient * moment(aw, t.degree);
    return sum;
}

double potential_expectation(const AnsatzWavefunction& aw) {
    double sum = 0.0;
    for (const auto& t : aw.potential().terms()) sum += t.coefficient * moment(aw, t.degree);
    return sum;
}

FisherReport fisher_report(const AnsatzWavefunction& aw) {
    FisherReport report;
    for (int p = 2; p <= aw.potential().max_degree(); p += 2)
        report.moments.push_back({p, moment(aw, p)});

    const auto moment_of = [&](int power) {
        for (const auto& m : report.moments)
            if (m.power == power) return m.value;
        return moment(aw, power);
    };

    report.fisher_gradient = fisher_information_gradient(aw);
    report.fisher_virial = 0.0;
    for (const auto& t : aw.potential().terms())
        report.fisher_virial += 4.0 * t.degree * t.coefficient * moment_of(t.degree);
    report.cr_product = report.fisher_virial * moment_of(2);
    report.discrepancy = std::abs(report.fisher_gradient - report.fisher_virial);
    return report;
}

}  // namespace viransatz
