#include "apbench/corpus/types.hpp"

#include "apbench/errors.hpp"
#include "apbench/util/utf8.hpp"

namespace apbench::corpus {

const char* to_string(InstanceLevel level) {
    return level == InstanceLevel::First ? "first" : "second";
}

InstanceLevel instance_level_from_string(const std::string& s) {
    if (s == "first") return InstanceLevel::First;
    if (s == "second") return InstanceLevel::Second;
    throw Error(ErrorCode::IoError, "unknown instance_level '" + s + "'");
}

RawDocument RawDocument::make(std::string doc_id, InstanceLevel level, std::string full_text) {
    RawDocument doc;
    doc.doc_id = std::move(doc_id);
    doc.instance_level = level;
    doc.full_text = std::move(full_text);
    doc.char_length = utf8::length(doc.full_text);
    return doc;
}

void to_json(json& j, const RawDocument& doc) {
    j = json{{"doc_id", doc.doc_id},
             {"instance_level", to_string(doc.instance_level)},
             {"full_text", doc.full_text}};
}

void from_json(const json& j, RawDocument& doc) {
    doc = RawDocument::make(j.at("doc_id").get<std::string>(),
                            instance_level_from_string(j.at("instance_level").get<std::string>()),
                            j.at("full_text").get<std::string>());
}

json pair_to_json(const CasePair& pair) {
    return json{{"pair_id", pair.pair_id},
                {"first_doc_id", pair.first.doc_id},
                {"second_doc_id", pair.second.doc_id},
                {"extracted_first_id", pair.extracted_first_id.format()},
                {"is_same_case", pair.is_same_case},
                {"validation_confidence", pair.validation_confidence},
                {"validation_reasoning", pair.validation_reasoning}};
}

const char* to_string(ExclusionReason reason) {
    switch (reason) {
        case ExclusionReason::NoId: return "no_id";
        case ExclusionReason::Unresolved: return "unresolved";
        case ExclusionReason::DuplicateId: return "duplicate_id";
        case ExclusionReason::ValidatorRejected: return "validator_rejected";
        case ExclusionReason::ValidatorInvalid: return "validator_invalid";
    }
    return "unknown";
}

void to_json(json& j, const Exclusion& e) {
    j = json{{"doc_id", e.doc_id}, {"reason", to_string(e.reason)}};
}

}  // namespace apbench::corpus
