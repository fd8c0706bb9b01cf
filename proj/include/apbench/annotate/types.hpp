#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace apbench::annotate {

using json = nlohmann::json;

struct InstanceSummary {
    std::string facts_or_new_facts;
    std::string disputed_issues;
    std::vector<std::string> legal_articles;  // non-empty, deduplicated, order-preserving
    std::string judgment;
};

enum class RationaleCategory { FactFinding, LawApplication, Procedural, None };

const char* to_string(RationaleCategory category);
RationaleCategory rationale_category_from_string(const std::string& s);

enum class ReviewStatus { Auto, PendingReview, HumanVerified };

const char* to_string(ReviewStatus status);
ReviewStatus review_status_from_string(const std::string& s);

struct AnnotationRecord {
    std::string pair_id;
    std::string reasoning_trace;
    double confidence = 0.0;  // annotation scale, [0, 1]
    bool is_reversal = false;
    InstanceSummary first_instance;
    InstanceSummary second_instance;
    std::string reason_for_reversal;  // empty iff !is_reversal
    RationaleCategory rationale_category = RationaleCategory::None;
    ReviewStatus review_status = ReviewStatus::Auto;
};

json annotation_to_json(const AnnotationRecord& record);
AnnotationRecord annotation_from_json(const json& j);

// gamma is the confidence threshold below which records need human review.
struct ReviewPolicy {
    double gamma = 0.8;
};

}  // namespace apbench::annotate
