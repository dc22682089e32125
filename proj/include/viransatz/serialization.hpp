#pragma once

#include <json.hpp>

#include "viransatz/energy.hpp"
#include "viransatz/legendre.hpp"
#include "viransatz/observables.hpp"
#include "viransatz/potential.hpp"

namespace viransatz {

/// Quantize to 12 significant digits; reports carry full machine values
/// internally, serialized output is pinned to this precision.
double round_12sig(double x);

/// {"terms": [{"degree": 2k, "coeff": a}]}
nlohmann::json to_json(const EvenPolynomialPotential& p);
EvenPolynomialPotential potential_from_json(const nlohmann::json& j);

/// {"I_gradient":…, "I_virial":…, "moments":{"2":…}, "cr_product":…}
nlohmann::json to_json(const FisherReport& report);

/// {"alpha":…, "multipliers":{"2":…}, "I":…, "moments":{…}}
nlohmann::json to_json(const LegendreState& state);

/// {"lambda":…, "omega":…, "E_schrodinger":…, "E_fisher":…, "E_num":…,
///  "cr_product":…}; omega/lambda are replaced by a "potential" object when
/// the potential is not quartic-shaped, E_num is null without a reference.
nlohmann::json energy_report_json(const EvenPolynomialPotential& p, const EnergyReport& report,
                                  double cr_product);

}  // namespace viransatz
