// JSON views of the library's result types, plus the number formatting used
// for CSV output (shortest decimal that round-trips).

#pragma once

#include <string>

#include <json.hpp>

#include "icsec/capacity_bounds.hpp"
#include "icsec/det_schemes.hpp"
#include "icsec/secrecy_audit.hpp"

namespace icsec {

std::string role_string(const BitRole& role);          // "0", "m<i>" or "j<i>"
std::string verdict_string(OptimalityKind kind);

nlohmann::json to_json(const DetChannelParams& p);
nlohmann::json to_json(const DetRegion& r);
nlohmann::json to_json(const OptimalityVerdict& v);
nlohmann::json to_json(const ExactRatio& r);
nlohmann::json to_json(const AuditReport& r);
nlohmann::json to_json(const OneShotScheme& s);
nlohmann::json to_json(const GwcTinDesign& d);

/// Shortest decimal representation that parses back to exactly the same
/// double ("." separator, no locale).
std::string format_double(double v);

}  // namespace icsec
