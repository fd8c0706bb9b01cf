#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace apbench::corpus {

using json = nlohmann::json;

enum class InstanceLevel { First, Second };

const char* to_string(InstanceLevel level);
InstanceLevel instance_level_from_string(const std::string& s);

struct RawDocument {
    std::string doc_id;
    InstanceLevel instance_level = InstanceLevel::First;
    std::string full_text;
    // Chinese characters, i.e. Unicode codepoints of full_text.
    std::size_t char_length = 0;

    static RawDocument make(std::string doc_id, InstanceLevel level, std::string full_text);
};

void to_json(json& j, const RawDocument& doc);
void from_json(const json& j, RawDocument& doc);

// Lossless split of a judgment document: the five fields concatenated in
// declaration order reproduce full_text byte for byte.
struct DocumentSections {
    std::string procedure_header;
    std::string factual_description;
    std::string judicial_reasoning;
    std::string operative_verdict;
    std::string unsegmented_remainder;

    std::string concat() const {
        return procedure_header + factual_description + judicial_reasoning +
               operative_verdict + unsegmented_remainder;
    }

    // False when no section marker matched and the whole document landed in
    // unsegmented_remainder.
    bool segmented() const { return unsegmented_remainder.empty(); }
};

struct CaseId {
    int year = 0;
    std::string court_code;
    std::string case_type_code;
    std::int64_t sequence = 0;

    // Canonical rendering with full-width brackets.
    std::string format() const;

    bool operator==(const CaseId&) const = default;
};

struct CasePair {
    std::string pair_id;
    RawDocument first;
    RawDocument second;
    CaseId extracted_first_id;
    bool is_same_case = false;
    double validation_confidence = 0.0;  // validator scale, [0, 10]
    std::string validation_reasoning;
};

json pair_to_json(const CasePair& pair);

enum class ExclusionReason { NoId, Unresolved, DuplicateId, ValidatorRejected, ValidatorInvalid };

const char* to_string(ExclusionReason reason);

struct Exclusion {
    std::string doc_id;
    ExclusionReason reason;
};

void to_json(json& j, const Exclusion& e);

}  // namespace apbench::corpus
