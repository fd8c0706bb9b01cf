#include "apbench/pipeline/types.hpp"

#include "apbench/errors.hpp"

namespace apbench::pipeline {

const char* to_string(Direction direction) {
    return direction == Direction::Affirm ? "affirm" : "reverse";
}

Direction direction_from_string(const std::string& s) {
    if (s == "affirm") return Direction::Affirm;
    if (s == "reverse") return Direction::Reverse;
    throw Error(ErrorCode::IoError, "unknown direction '" + s + "'");
}

std::string AblationConfig::label() const {
    std::string out;
    out += enable_issue ? 'T' : 'F';
    out += enable_retrieval ? 'T' : 'F';
    out += enable_predict ? 'T' : 'F';
    return out;
}

std::vector<AblationConfig> standard_ablations() {
    return {{true, true, true},
            {true, false, true},
            {false, true, true},
            {false, false, true},
            {false, false, false}};
}

std::string serialize_issues(const DisputedIssues& issues) {
    std::string out;
    for (std::size_t i = 0; i < issues.issues.size(); ++i) {
        out += std::to_string(i + 1) + ". " + issues.issues[i] + "\n";
    }
    return out;
}

std::string serialize_articles(const std::vector<kb::StatuteArticle>& articles) {
    if (articles.empty()) return "（未检索到可适用的法条）\n";
    std::string out;
    for (const auto& a : articles) {
        out += a.law_name + a.article_number + "：" + a.text + "\n";
    }
    return out;
}

std::string serialize_prediction(const VerdictPrediction& prediction) {
    std::string out = "预测方向：";
    out += prediction.direction == Direction::Affirm ? "维持原判" : "撤销改判";
    out += "\n理由：" + prediction.rationale + "\n";
    return out;
}

}  // namespace apbench::pipeline
