#pragma once

// Validator for the JSON Schema keywords used by the report schema:
// $ref (local), type, const, enum, pattern, minimum, maximum, properties,
// required, additionalProperties, items, minItems, maxItems, oneOf, anyOf,
// allOf. Unknown keywords are ignored.

#include "json.hpp"

#include <string>
#include <vector>

namespace picard::testing {

/// Error messages with JSON-pointer locations; empty when `instance` is valid.
std::vector<std::string> schema_errors(const nlohmann::json& schema, const nlohmann::json& instance);

/// The report schema shipped with the repository.
const nlohmann::json& report_schema();

}  // namespace picard::testing
