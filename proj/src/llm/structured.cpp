#include "apbench/llm/structured.hpp"

#include "apbench/errors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>

namespace apbench::llm {

namespace {

enum class FieldType { String, Number, NumberOrNumericString, Boolean, StringArray, Object };

struct FieldSpec {
    FieldType type;
    // set for Object fields
    std::map<std::string, FieldSpec> nested;
};

using Schema = std::map<std::string, FieldSpec>;

const std::map<std::string, Schema>& schema_registry() {
    static const std::map<std::string, Schema> registry = [] {
        std::map<std::string, Schema> r;

        r["pair_validation"] = {
            {"is_same_case", {FieldType::Boolean, {}}},
            {"confidence_score", {FieldType::NumberOrNumericString, {}}},
            {"reasoning", {FieldType::String, {}}},
        };

        Schema first_instance = {
            {"facts", {FieldType::String, {}}},
            {"disputed_issues", {FieldType::String, {}}},
            {"legal_articles", {FieldType::StringArray, {}}},
            {"judgment", {FieldType::String, {}}},
        };
        Schema second_instance = {
            {"new_facts", {FieldType::String, {}}},
            {"disputed_issues", {FieldType::String, {}}},
            {"legal_articles", {FieldType::StringArray, {}}},
            {"judgment", {FieldType::String, {}}},
        };
        r["annotation"] = {
            {"reasoning_trace", {FieldType::String, {}}},
            {"confidence_score", {FieldType::Number, {}}},
            {"is_reversal", {FieldType::Boolean, {}}},
            {"first_instance", {FieldType::Object, first_instance}},
            {"second_instance", {FieldType::Object, second_instance}},
            {"reason_for_reversal", {FieldType::String, {}}},
        };

        r["rationale_category"] = {
            {"category", {FieldType::String, {}}},
        };

        r["issue_list"] = {
            {"issues", {FieldType::StringArray, {}}},
        };

        r["article_selection"] = {
            {"selected_article_ids", {FieldType::StringArray, {}}},
        };

        r["verdict_prediction"] = {
            {"direction", {FieldType::String, {}}},
            {"rationale", {FieldType::String, {}}},
        };

        r["judge_scores"] = {
            {"verdict_score", {FieldType::Number, {}}},
            {"fact_score", {FieldType::Number, {}}},
            {"law_score", {FieldType::Number, {}}},
            {"logic_score", {FieldType::Number, {}}},
            {"justification", {FieldType::String, {}}},
        };

        return r;
    }();
    return registry;
}

bool is_numeric_string(const json& v) {
    if (!v.is_string()) return false;
    const auto& s = v.get_ref<const std::string&>();
    if (s.empty()) return false;
    double parsed = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), parsed);
    return ec == std::errc() && ptr == s.data() + s.size();
}

void check_object(const json& value, const Schema& schema, const std::string& prefix,
                  std::vector<std::string>& violations) {
    if (!value.is_object()) {
        violations.push_back(prefix.empty() ? "top level: expected object"
                                            : prefix + ": expected object");
        return;
    }
    for (const auto& [name, spec] : schema) {
        const std::string path = prefix.empty() ? name : prefix + "." + name;
        auto it = value.find(name);
        if (it == value.end()) {
            violations.push_back("missing field " + path);
            continue;
        }
        const json& v = *it;
        switch (spec.type) {
            case FieldType::String:
                if (!v.is_string()) violations.push_back(path + ": expected string");
                break;
            case FieldType::Number:
                if (!v.is_number()) violations.push_back(path + ": expected number");
                break;
            case FieldType::NumberOrNumericString:
                if (!v.is_number() && !is_numeric_string(v)) {
                    violations.push_back(path + ": expected number");
                }
                break;
            case FieldType::Boolean:
                if (!v.is_boolean()) violations.push_back(path + ": expected bool");
                break;
            case FieldType::StringArray:
                if (!v.is_array() ||
                    !std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_string(); })) {
                    violations.push_back(path + ": expected array of strings");
                }
                break;
            case FieldType::Object:
                check_object(v, spec.nested, path, violations);
                break;
        }
    }
    for (auto it = value.begin(); it != value.end(); ++it) {
        if (schema.find(it.key()) == schema.end()) {
            const std::string path = prefix.empty() ? it.key() : prefix + "." + it.key();
            violations.push_back("extra field " + path);
        }
    }
}

// Finds the balanced object starting at `open` ('{'), honoring string
// literals and escapes. Returns one past the closing brace, or npos.
std::size_t balanced_end(const std::string& text, std::size_t open) {
    int depth = 0;
    bool in_string = false;
    for (std::size_t i = open; i < text.size(); ++i) {
        const char c = text[i];
        if (in_string) {
            if (c == '\\') {
                ++i;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        if (c == '"') {
            in_string = true;
        } else if (c == '{') {
            ++depth;
        } else if (c == '}') {
            if (--depth == 0) return i + 1;
        }
    }
    return std::string::npos;
}

std::optional<json> parse_first_object(const std::string& text) {
    std::size_t pos = text.find('{');
    while (pos != std::string::npos) {
        const std::size_t end = balanced_end(text, pos);
        if (end != std::string::npos) {
            json parsed = json::parse(text.substr(pos, end - pos), nullptr,
                                      /*allow_exceptions=*/false);
            if (!parsed.is_discarded()) return parsed;
        }
        pos = text.find('{', pos + 1);
    }
    return std::nullopt;
}

std::string strip_code_fences(const std::string& text) {
    const std::size_t fence = text.find("```");
    if (fence == std::string::npos) return text;
    std::size_t body = text.find('\n', fence);
    if (body == std::string::npos) return text;
    ++body;
    const std::size_t close = text.find("```", body);
    if (close == std::string::npos) return text.substr(body);
    return text.substr(body, close - body);
}

}  // namespace

bool has_schema(const std::string& schema_id) {
    return schema_registry().count(schema_id) > 0;
}

std::vector<std::string> validate_schema(const json& value, const std::string& schema_id) {
    auto it = schema_registry().find(schema_id);
    if (it == schema_registry().end()) {
        throw Error(ErrorCode::ConfigError, "unknown schema '" + schema_id + "'");
    }
    std::vector<std::string> violations;
    check_object(value, it->second, "", violations);
    return violations;
}

json extract_structured(const std::string& response_text, const std::string& schema_id) {
    auto parsed = parse_first_object(strip_code_fences(response_text));
    if (!parsed) {
        // A fence may wrap prose around the object rather than the object
        // itself; fall back to scanning the raw response.
        parsed = parse_first_object(response_text);
    }
    if (!parsed) {
        throw Error(ErrorCode::Unparseable, "no JSON object in response");
    }
    auto violations = validate_schema(*parsed, schema_id);
    if (!violations.empty()) {
        std::string msg = "schema '" + schema_id + "':";
        for (const auto& v : violations) msg += " " + v + ";";
        throw Error(ErrorCode::SchemaViolation, msg);
    }
    return *parsed;
}

}  // namespace apbench::llm
