#pragma once

#include <string>

#include "boxtrio/oracle.hpp"
#include "boxtrio/perturbation.hpp"
#include "boxtrio/sweep.hpp"
#include "json.hpp"

namespace boxtrio {

// Fixed float spelling used in every emitted file: 17 significant digits,
// lowercase exponent, plain "nan"/"inf". Keeps outputs byte-stable.
std::string format_double(double v);

// One curve file: header "lambda,E_1,...,E_K,scaled_1,...,scaled_K" with
// K = min(max_levels, block dimension), then one row per grid point. Scaled
// entries are "nan" where lambda = 0.
std::string spectrum_csv(const SpectrumCurve& curve, IrrepLabel irrep,
                         int max_levels);

nlohmann::ordered_json to_json(const AvoidedCrossing& c);
nlohmann::ordered_json to_json(const SlopeReport& r);
std::string to_csv(const SlopeReport& r);
nlohmann::ordered_json to_json(const oracle::OracleReport& r);
nlohmann::ordered_json to_json(const Salc& s);
nlohmann::ordered_json to_json(const HamiltonianBlock& b);
nlohmann::ordered_json to_json(const AsymptoteReport& r);
nlohmann::ordered_json to_json(const AssociationReport& r);

}  // namespace boxtrio
