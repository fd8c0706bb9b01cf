#include "apbench/annotate/types.hpp"

#include "apbench/errors.hpp"

namespace apbench::annotate {

const char* to_string(RationaleCategory category) {
    switch (category) {
        case RationaleCategory::FactFinding: return "fact_finding";
        case RationaleCategory::LawApplication: return "law_application";
        case RationaleCategory::Procedural: return "procedural";
        case RationaleCategory::None: return "none";
    }
    return "none";
}

RationaleCategory rationale_category_from_string(const std::string& s) {
    if (s == "fact_finding") return RationaleCategory::FactFinding;
    if (s == "law_application") return RationaleCategory::LawApplication;
    if (s == "procedural") return RationaleCategory::Procedural;
    if (s == "none") return RationaleCategory::None;
    throw Error(ErrorCode::IoError, "unknown rationale_category '" + s + "'");
}

const char* to_string(ReviewStatus status) {
    switch (status) {
        case ReviewStatus::Auto: return "auto";
        case ReviewStatus::PendingReview: return "pending_review";
        case ReviewStatus::HumanVerified: return "human_verified";
    }
    return "auto";
}

ReviewStatus review_status_from_string(const std::string& s) {
    if (s == "auto") return ReviewStatus::Auto;
    if (s == "pending_review") return ReviewStatus::PendingReview;
    if (s == "human_verified") return ReviewStatus::HumanVerified;
    throw Error(ErrorCode::IoError, "unknown review_status '" + s + "'");
}

namespace {

json summary_to_json(const InstanceSummary& s, const char* facts_key) {
    return json{{facts_key, s.facts_or_new_facts},
                {"disputed_issues", s.disputed_issues},
                {"legal_articles", s.legal_articles},
                {"judgment", s.judgment}};
}

InstanceSummary summary_from_json(const json& j, const char* facts_key) {
    InstanceSummary s;
    s.facts_or_new_facts = j.at(facts_key).get<std::string>();
    s.disputed_issues = j.at("disputed_issues").get<std::string>();
    s.legal_articles = j.at("legal_articles").get<std::vector<std::string>>();
    s.judgment = j.at("judgment").get<std::string>();
    return s;
}

}  // namespace

json annotation_to_json(const AnnotationRecord& record) {
    return json{{"pair_id", record.pair_id},
                {"reasoning_trace", record.reasoning_trace},
                {"confidence_score", record.confidence},
                {"is_reversal", record.is_reversal},
                {"first_instance", summary_to_json(record.first_instance, "facts")},
                {"second_instance", summary_to_json(record.second_instance, "new_facts")},
                {"reason_for_reversal", record.reason_for_reversal},
                {"rationale_category", to_string(record.rationale_category)},
                {"review_status", to_string(record.review_status)}};
}

AnnotationRecord annotation_from_json(const json& j) {
    AnnotationRecord r;
    r.pair_id = j.at("pair_id").get<std::string>();
    r.reasoning_trace = j.at("reasoning_trace").get<std::string>();
    r.confidence = j.at("confidence_score").get<double>();
    r.is_reversal = j.at("is_reversal").get<bool>();
    r.first_instance = summary_from_json(j.at("first_instance"), "facts");
    r.second_instance = summary_from_json(j.at("second_instance"), "new_facts");
    r.reason_for_reversal = j.at("reason_for_reversal").get<std::string>();
    r.rationale_category =
        rationale_category_from_string(j.at("rationale_category").get<std::string>());
    r.review_status = review_status_from_string(j.at("review_status").get<std::string>());
    return r;
}

}  // namespace apbench::annotate
