#include "viransatz/serialization.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

namespace viransatz {

double round_12sig(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

nlohmann::json to_json(const EvenPolynomialPotential& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : p.terms())
        terms.push_back({{"degree", t.degree}, {"coeff", round_12sig(t.coefficient)}});
    return {{"terms", terms}};
}

EvenPolynomialPotential potential_from_json(const nlohmann::json& j) {
    if (!j.contains("terms") || !j["terms"].is_array())
        throw ValidationError(ErrorCode::BadInput, "potential JSON must have a terms array");
    std::vector<PotentialTerm> terms;
    for (const auto& t : j["terms"])
        terms.push_back({t.at("degree").get<int>(), t.at("coeff").get<double>()});
    return EvenPolynomialPotential::validate(std::move(terms));
}

namespace {

nlohmann::json power_map(const std::vector<PowerValue>& values) {
    nlohmann::json m = nlohmann::json::object();
    for (const auto& v : values) m[std::to_string(v.power)] = round_12sig(v.value);
    return m;
}

}  // namespace

nlohmann::json to_json(const FisherReport& report) {
    return {{"I_gradient", round_12sig(report.fisher_gradient)},
            {"I_virial", round_12sig(report.fisher_virial)},
            {"moments", power_map(report.moments)},
            {"cr_product", round_12sig(report.cr_product)}};
}

nlohmann::json to_json(const LegendreState& state) {
    return {{"alpha", round_12sig(state.alpha)},
            {"multipliers", power_map(state.multipliers)},
            {"I", round_12sig(state.fisher)},
            {"moments", power_map(state.moments)}};
}

nlohmann::json energy_report_json(const EvenPolynomialPotential& p, const EnergyReport& report,
                                  double cr_product) {
    nlohmann::json j = {{"E_schrodinger", round_12sig(report.e_schrodinger)},
                        {"E_fisher", round_12sig(report.e_fisher)},
                        {"E_num", nullptr},
                        {"cr_product", round_12sig(cr_product)}};
    if (report.e_reference) j["E_num"] = round_12sig(*report.e_reference);
    if (const auto shape = p.quartic_shape()) {
        j["omega"] = round_12sig(shape->first);
        j["lambda"] = round_12sig(shape->second);
    } else {
        j["potential"] = to_json(p);
    }
    return j;
}

}  // namespace viransatz
