#pragma once

#include <json.hpp>

#include "scc/core.hpp"
#include "scc/criteria.hpp"

// JSON encoding of report types for the command-line tool. Round-trip safe:
// from_json(to_json(r)) == r, field for field, including exact doubles.

namespace scc {

void to_json(nlohmann::json& j, const VerificationReport& report);
void from_json(const nlohmann::json& j, VerificationReport& report);

void to_json(nlohmann::json& j, const CriterionResult& result);
void from_json(const nlohmann::json& j, CriterionResult& result);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

}  // namespace scc
