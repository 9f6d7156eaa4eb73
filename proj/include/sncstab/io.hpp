#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "sncstab/oracle.hpp"

namespace sncstab {

using Json = nlohmann::ordered_json;

/// Canonical serialization; parse(emit(cfg)) reproduces cfg exactly and
/// emit is deterministic. Unknown fields are rejected.
Json config_to_json(const Configuration& cfg);
Configuration config_from_json(const Json& j);

std::string config_to_string(const Configuration& cfg);
Configuration config_from_string(const std::string& text);
Configuration load_config(const std::string& path);
void save_config(const Configuration& cfg, const std::string& path);

/// ClassExpr from "L", "L+2*Y1-Y2" style input; symbols resolved in cfg.
ClassExpr parse_class(const Configuration& cfg, const std::string& text);
std::string class_to_text(const Configuration& cfg, const ClassExpr& e);

/// Component subset from a comma-separated name list; returns a bitmask.
uint32_t parse_subset(const Configuration& cfg, const std::string& text);

Json poly_to_json(const Poly& p);
Json rational_json(const Rational& r);
Json interval_report_to_json(const IntervalReport& rep);
Json twist_to_json(const Twist& t);
Json trace_to_json(const EnumerationTrace& tr);
Json oracle_report_to_json(const OracleReport& rep);
Json check_results_to_json(const std::vector<CheckResult>& checks);

}  // namespace sncstab
