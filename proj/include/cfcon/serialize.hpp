#pragma once

#include <string>

#include <json.hpp>

#include "cfcon/cfc.hpp"
#include "cfcon/structure.hpp"

namespace cfcon {

// Six significant digits, shortest form ("0.367879", "1e-05").
std::string format_real(double x);

// Rounds to six significant digits so JSON output is stable.
double round6(double x);

nlohmann::json to_json(const CheckReport& report);
nlohmann::json to_json(const CfcCertificate& cert);

}  // namespace cfcon
