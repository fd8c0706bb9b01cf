#pragma once

#include "apbench/corpus/types.hpp"
#include "apbench/kb/statute.hpp"
#include "apbench/llm/cache.hpp"

#include <optional>
#include <string>
#include <vector>

namespace apbench::pipeline {

// The case input: the first-instance judgment (with its section split) plus
// the new appellate facts. e_new may be empty — no new evidence.
struct CaseInput {
    std::string case_id;
    corpus::DocumentSections first_sections;
    std::string first_full_text;
    std::string new_evidence;
};

struct DisputedIssues {
    enum class Source { Agent, Disabled };
    std::vector<std::string> issues;
    Source source = Source::Disabled;
};

enum class Direction { Affirm, Reverse };

const char* to_string(Direction direction);
Direction direction_from_string(const std::string& s);

struct VerdictPrediction {
    Direction direction = Direction::Affirm;
    std::string rationale;
};

// The five Table-4 rows: (T,T,T), (T,F,T), (F,T,T), (F,F,T), (F,F,F).
// Writing is always enabled.
struct AblationConfig {
    bool enable_issue = true;
    bool enable_retrieval = true;
    bool enable_predict = true;

    std::string label() const;  // e.g. "TTT"

    bool operator==(const AblationConfig&) const = default;
};

// The standard five-row ablation matrix, in documented order.
std::vector<AblationConfig> standard_ablations();

struct StageTranscript {
    std::string stage;  // issue | law | verdict | write
    int sequence = 0;   // execution order within the case
    llm::ChatExchange exchange;
};

struct StageFailure {
    std::string stage;
    std::string error;
};

struct PipelineState {
    CaseInput input;
    DisputedIssues issues;
    std::vector<kb::StatuteArticle> articles;
    std::optional<VerdictPrediction> prediction;
    std::string judgment_text;  // y, non-empty on success
    std::vector<StageTranscript> transcripts;
    AblationConfig ablation;
    std::optional<StageFailure> failure;

    bool succeeded() const { return !failure.has_value(); }
};

// Canonical serializations of intermediate outputs. Downstream prompts embed
// these strings verbatim, which is what makes the conditioning contract a
// substring check.
std::string serialize_issues(const DisputedIssues& issues);
std::string serialize_articles(const std::vector<kb::StatuteArticle>& articles);
std::string serialize_prediction(const VerdictPrediction& prediction);

}  // namespace apbench::pipeline
