#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace apbench::llm {

using json = nlohmann::json;

// All prompts demand strictly valid JSON; models decorate anyway. This strips
// code fences and surrounding prose, parses the outermost JSON object, and
// validates it against a named schema. Throws Unparseable or SchemaViolation.
json extract_structured(const std::string& response_text, const std::string& schema_id);

// Violations ("missing field x", "extra field y", "field z: expected bool")
// for the named schema; empty means valid.
std::vector<std::string> validate_schema(const json& value, const std::string& schema_id);

bool has_schema(const std::string& schema_id);

}  // namespace apbench::llm
