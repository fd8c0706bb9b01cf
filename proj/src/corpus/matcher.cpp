#include "apbench/corpus/matcher.hpp"

#include "apbench/errors.hpp"
#include "apbench/llm/structured.hpp"
#include "apbench/util/log.hpp"
#include "apbench/util/rng.hpp"
#include "apbench/util/utf8.hpp"

#include <charconv>
#include <cmath>
#include <map>

namespace apbench::corpus {

namespace {

const char* kValidatorSystem =
    "你是一名资深的中国法律文书审核专家，擅长将民事、刑事、行政案件的一审与二审文书进行关联比对，"
    "具备严谨的逻辑分析能力和细节把控能力。";

std::string build_validator_prompt(const CasePair& pair) {
    std::string prompt;
    prompt +=
        "请判断下面给出的两份裁判文书（一份一审判决书、一份二审判决书）是否属于同一案件的前后审理"
        "程序，即二审是否针对该一审判决提起的上诉。\n";
    prompt +=
        "比对时请依次核对：1）二审文书中援引的原审案号与一审案号是否一致；2）上诉人、被上诉人与原审"
        "原被告是否对应；3）案由与核心争议事实是否一致。注意区分关联案件与同一案件。\n";
    prompt += "完成推理后，严格按照以下 JSON 格式输出结果，不要输出其他内容：\n";
    prompt += "{\"is_same_case\": true/false, \"confidence_score\": \"0-10\", \"reasoning\": \"\"}\n\n";
    prompt += "【一审判决书】\n" + pair.first.full_text + "\n\n";
    prompt += "【二审判决书】\n" + pair.second.full_text + "\n";
    return prompt;
}

double confidence_from_json(const llm::json& value) {
    const auto& v = value.at("confidence_score");
    if (v.is_number()) return v.get<double>();
    const auto& s = v.get_ref<const std::string&>();
    double parsed = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), parsed);
    return parsed;
}

}  // namespace

MatchResult match_case_pairs(const std::vector<RawDocument>& firsts,
                             const std::vector<RawDocument>& seconds,
                             const CaseIdGrammar& grammar) {
    MatchResult result;

    // Index first-instance documents by their own identifier.
    std::map<std::string, const RawDocument*> by_id;
    std::map<std::string, bool> duplicated;
    for (const auto& doc : firsts) {
        auto id = extract_first_instance_case_id(doc.full_text, grammar);
        if (!id) {
            result.exclusions.push_back({doc.doc_id, ExclusionReason::NoId});
            continue;
        }
        const std::string key = id->format();
        auto [it, inserted] = by_id.emplace(key, &doc);
        if (!inserted) {
            // Both documents sharing the identifier are unusable.
            if (!duplicated[key]) {
                result.exclusions.push_back({it->second->doc_id, ExclusionReason::DuplicateId});
                duplicated[key] = true;
            }
            result.exclusions.push_back({doc.doc_id, ExclusionReason::DuplicateId});
        }
    }

    std::size_t pair_seq = 0;
    for (const auto& doc : seconds) {
        const auto cited = extract_all_first_instance_case_ids(doc.full_text, grammar);
        if (cited.empty()) {
            result.exclusions.push_back({doc.doc_id, ExclusionReason::NoId});
            continue;
        }
        if (cited.size() > 1) {
            log::warn("document " + doc.doc_id + " cites " + std::to_string(cited.size()) +
                      " first-instance identifiers; taking the first");
        }
        const std::string key = cited.front().format();
        auto it = by_id.find(key);
        if (it == by_id.end() || duplicated.count(key)) {
            result.exclusions.push_back({doc.doc_id, ExclusionReason::Unresolved});
            continue;
        }
        CasePair pair;
        pair.pair_id = "pair-" + std::to_string(++pair_seq);
        pair.first = *it->second;
        pair.second = doc;
        pair.extracted_first_id = cited.front();
        result.pairs.push_back(std::move(pair));
    }
    return result;
}

CasePair validate_pair_semantics(CasePair pair, llm::ChatProvider& validator) {
    const std::string prompt = build_validator_prompt(pair);
    std::string last_error;
    for (int attempt = 0; attempt < 2; ++attempt) {
        const std::string response = validator.complete(kValidatorSystem, prompt);
        try {
            const auto parsed = llm::extract_structured(response, "pair_validation");
            pair.is_same_case = parsed.at("is_same_case").get<bool>();
            pair.validation_confidence = confidence_from_json(parsed);
            pair.validation_reasoning = parsed.at("reasoning").get<std::string>();
            return pair;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Unparseable && e.code() != ErrorCode::SchemaViolation) {
                throw;
            }
            last_error = e.what();
        }
    }
    throw Error(ErrorCode::ValidatorOutputInvalid, last_error);
}

std::vector<CasePair> sample_for_review(const std::vector<CasePair>& pairs, double rate,
                                        std::uint64_t seed) {
    const auto k = static_cast<std::size_t>(
        std::llround(rate * static_cast<double>(pairs.size())));
    std::vector<CasePair> subset;
    subset.reserve(k);
    for (const auto idx : rng::sample_indices(pairs.size(), k, seed)) {
        subset.push_back(pairs[idx]);
    }
    return subset;
}

}  // namespace apbench::corpus
