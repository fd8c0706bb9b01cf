#include "apbench/annotate/annotator.hpp"

#include "apbench/errors.hpp"
#include "apbench/llm/structured.hpp"
#include "apbench/util/log.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace apbench::annotate {

namespace {

const char* kAnnotatorSystem =
    "你是一名专业的中国法律文书分析专家，负责比对同一案件的一审与二审判决书并提取结构化标注。";

std::string build_annotation_prompt(const corpus::CasePair& pair) {
    std::string prompt;
    prompt += "下面提供同一案件的【一审判决书】与【二审判决书】全文。请完成两项任务：\n";
    prompt += "1. 深入比对两份文书，逐步分析事实认定、争议焦点、法律适用与裁判结果的异同；\n";
    prompt += "2. 将全部分析结果整合为一个严格合法的 JSON 对象输出，不要包含 Markdown 标记。\n\n";
    prompt += "输出必须严格符合以下结构：\n";
    prompt +=
        "{\n"
        "  \"reasoning_trace\": \"你的逐步分析过程\",\n"
        "  \"confidence_score\": float,\n"
        "  \"is_reversal\": bool,\n"
        "  \"first_instance\": {\"facts\": \"string\", \"disputed_issues\": \"string\", "
        "\"legal_articles\": [\"string\"], \"judgment\": \"string\"},\n"
        "  \"second_instance\": {\"new_facts\": \"string\", \"disputed_issues\": \"string\", "
        "\"legal_articles\": [\"string\"], \"judgment\": \"string\"},\n"
        "  \"reason_for_reversal\": \"string\"\n"
        "}\n\n";
    prompt += "字段说明：is_reversal 表示二审是否改判（含发回重审）；new_facts 仅记录二审新查明的"
              "事实；legal_articles 为裁判援引的具体法律条文；若维持原判，reason_for_reversal 置空。"
              "confidence_score 为 0 到 1 之间的自评置信度。\n\n";
    prompt += "【一审判决书】\n" + pair.first.full_text + "\n\n";
    prompt += "【二审判决书】\n" + pair.second.full_text + "\n";
    return prompt;
}

std::vector<std::string> sanitize_articles(std::vector<std::string> articles) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (auto& a : articles) {
        if (a.empty()) continue;
        if (seen.insert(a).second) out.push_back(std::move(a));
    }
    return out;
}

InstanceSummary summary_from_response(const json& j, const char* facts_key) {
    InstanceSummary s;
    s.facts_or_new_facts = j.at(facts_key).get<std::string>();
    s.disputed_issues = j.at("disputed_issues").get<std::string>();
    s.legal_articles = sanitize_articles(j.at("legal_articles").get<std::vector<std::string>>());
    s.judgment = j.at("judgment").get<std::string>();
    return s;
}

bool has_duplicates(const std::vector<std::string>& items) {
    std::set<std::string> seen(items.begin(), items.end());
    return seen.size() != items.size();
}

}  // namespace

AnnotationRecord annotate_pair(const corpus::CasePair& pair, llm::ChatProvider& annotator) {
    const std::string prompt = build_annotation_prompt(pair);
    std::string last_error;
    for (int attempt = 0; attempt < 2; ++attempt) {
        const std::string response = annotator.complete(kAnnotatorSystem, prompt);
        json parsed;
        try {
            parsed = llm::extract_structured(response, "annotation");
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Unparseable && e.code() != ErrorCode::SchemaViolation) {
                throw;
            }
            last_error = e.what();
            continue;
        }

        AnnotationRecord record;
        record.pair_id = pair.pair_id;
        record.reasoning_trace = parsed.at("reasoning_trace").get<std::string>();
        record.confidence = parsed.at("confidence_score").get<double>();
        record.is_reversal = parsed.at("is_reversal").get<bool>();
        record.first_instance = summary_from_response(parsed.at("first_instance"), "facts");
        record.second_instance = summary_from_response(parsed.at("second_instance"), "new_facts");
        record.reason_for_reversal = parsed.at("reason_for_reversal").get<std::string>();
        record.rationale_category = RationaleCategory::None;
        record.review_status = ReviewStatus::Auto;

        if (record.confidence < 0.0 || record.confidence > 1.0) {
            log::warn("pair " + pair.pair_id + ": confidence " +
                      std::to_string(record.confidence) + " clamped to [0,1]");
            record.confidence = std::clamp(record.confidence, 0.0, 1.0);
        }
        if (!record.is_reversal && !record.reason_for_reversal.empty()) {
            log::warn("pair " + pair.pair_id +
                      ": reason_for_reversal on an affirmed case, cleared");
            record.reason_for_reversal.clear();
        }
        return record;
    }
    throw Error(ErrorCode::AnnotatorOutputInvalid, last_error);
}

std::vector<std::string> validate_annotation(const AnnotationRecord& record) {
    std::vector<std::string> violations;
    if (record.confidence < 0.0 || record.confidence > 1.0) {
        violations.push_back("confidence " + std::to_string(record.confidence) +
                             " outside [0,1]");
    }
    if (!record.is_reversal) {
        if (!record.reason_for_reversal.empty()) {
            violations.push_back("reason_for_reversal must be empty when is_reversal is false");
        }
        if (record.rationale_category != RationaleCategory::None) {
            violations.push_back("rationale_category must be none when is_reversal is false");
        }
    } else if (record.reason_for_reversal.empty()) {
        violations.push_back("reason_for_reversal must be non-empty when is_reversal is true");
    }
    for (const auto* summary : {&record.first_instance, &record.second_instance}) {
        for (const auto& article : summary->legal_articles) {
            if (article.empty()) {
                violations.push_back("legal_articles contains an empty citation");
                break;
            }
        }
        if (has_duplicates(summary->legal_articles)) {
            violations.push_back("legal_articles contains duplicates");
        }
    }
    return violations;
}

GatedRecords enqueue_low_confidence(std::vector<AnnotationRecord> records,
                                    const ReviewPolicy& policy) {
    GatedRecords out;
    for (auto& record : records) {
        if (record.confidence < policy.gamma) {
            record.review_status = ReviewStatus::PendingReview;
            out.queue.push_back(std::move(record));
        } else {
            out.auto_accepted.push_back(std::move(record));
        }
    }
    return out;
}

std::optional<AnnotationRecord> apply_review(const AnnotationRecord& record,
                                             const ReviewDecision& decision) {
    if (record.review_status != ReviewStatus::PendingReview) {
        throw Error(ErrorCode::InvalidEdit,
                    "record " + record.pair_id + " is not pending review");
    }
    switch (decision.kind) {
        case ReviewDecision::Kind::Reject:
            return std::nullopt;
        case ReviewDecision::Kind::Accept: {
            AnnotationRecord accepted = record;
            accepted.review_status = ReviewStatus::HumanVerified;
            return accepted;
        }
        case ReviewDecision::Kind::Edit: {
            json merged = annotation_to_json(record);
            merged.update(decision.edited_fields);
            AnnotationRecord edited;
            try {
                edited = annotation_from_json(merged);
            } catch (const std::exception& e) {
                throw Error(ErrorCode::InvalidEdit, e.what());
            }
            edited.pair_id = record.pair_id;
            edited.review_status = ReviewStatus::HumanVerified;
            const auto violations = validate_annotation(edited);
            if (!violations.empty()) {
                std::string msg = "edited record invalid:";
                for (const auto& v : violations) msg += " " + v + ";";
                throw Error(ErrorCode::InvalidEdit, msg);
            }
            return edited;
        }
    }
    return std::nullopt;
}

RationaleCategory classify_rationale(const std::string& reason_text,
                                     llm::ChatProvider& classifier) {
    if (reason_text.empty()) {
        throw std::invalid_argument("classify_rationale: reason_text must be non-empty");
    }
    const std::string prompt =
        "请将下面的改判原因归类为以下三类之一，并严格输出 JSON：{\"category\": \"...\"}。\n"
        "可选类别：fact_finding（事实认定错误）、law_application（法律适用错误）、"
        "procedural（程序违法）。\n\n改判原因：" +
        reason_text;

    auto map_label = [](std::string label) -> std::optional<RationaleCategory> {
        std::transform(label.begin(), label.end(), label.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (label.find("fact") != std::string::npos || label.find("事实") != std::string::npos) {
            return RationaleCategory::FactFinding;
        }
        if (label.find("law") != std::string::npos || label.find("法律") != std::string::npos) {
            return RationaleCategory::LawApplication;
        }
        if (label.find("procedur") != std::string::npos ||
            label.find("程序") != std::string::npos) {
            return RationaleCategory::Procedural;
        }
        return std::nullopt;
    };

    for (int attempt = 0; attempt < 2; ++attempt) {
        const std::string response = classifier.complete(kAnnotatorSystem, prompt);
        std::string label;
        try {
            label = llm::extract_structured(response, "rationale_category")
                        .at("category")
                        .get<std::string>();
        } catch (const Error&) {
            label = response;  // bare-label replies are acceptable
        }
        if (auto category = map_label(label)) return *category;
    }
    throw Error(ErrorCode::ClassifierOutputInvalid,
                "classifier did not produce a known category");
}

}  // namespace apbench::annotate
