#include "apbench/kb/selector.hpp"

#include "apbench/errors.hpp"
#include "apbench/llm/structured.hpp"
#include "apbench/util/log.hpp"

#include <set>

namespace apbench::kb {

namespace {

const char* kSelectorSystem =
    "你是一名精通中国法律检索的助手，负责从候选法条中筛选出真正支配本案裁判的条文。";

std::string build_selector_prompt(const std::vector<RetrievalHit>& hits,
                                  const std::vector<std::string>& issue_statements) {
    std::string prompt = "本案争议焦点如下：\n";
    if (issue_statements.empty()) {
        prompt += "（未单独归纳争议焦点，请依据候选法条自身的相关性判断）\n";
    } else {
        for (std::size_t i = 0; i < issue_statements.size(); ++i) {
            prompt += std::to_string(i + 1) + ". " + issue_statements[i] + "\n";
        }
    }
    prompt += "\n候选法条（共" + std::to_string(hits.size()) + "条）：\n";
    for (const auto& hit : hits) {
        prompt += "[id:" + hit.article.article_id + "] " + hit.article.law_name +
                  hit.article.article_number + "：" + hit.article.text + "\n";
    }
    prompt +=
        "\n请挑选与争议焦点直接相关、足以支撑裁判说理的法条（可以为空），严格输出 JSON："
        "{\"selected_article_ids\": [\"id\", ...]}，id 必须来自候选列表。";
    return prompt;
}

}  // namespace

std::vector<StatuteArticle> fine_select(const std::vector<RetrievalHit>& hits,
                                        const std::vector<std::string>& issue_statements,
                                        llm::ChatProvider& selector) {
    if (hits.empty()) {
        throw std::invalid_argument("fine_select: hits must be non-empty");
    }
    const std::string prompt = build_selector_prompt(hits, issue_statements);
    std::string last_error;
    for (int attempt = 0; attempt < 2; ++attempt) {
        const std::string response = selector.complete(kSelectorSystem, prompt);
        std::set<std::string> selected;
        try {
            const auto parsed = llm::extract_structured(response, "article_selection");
            for (const auto& id : parsed.at("selected_article_ids")) {
                selected.insert(id.get<std::string>());
            }
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Unparseable && e.code() != ErrorCode::SchemaViolation) {
                throw;
            }
            last_error = e.what();
            continue;
        }

        std::vector<StatuteArticle> out;
        for (const auto& hit : hits) {
            if (selected.erase(hit.article.article_id) > 0) {
                out.push_back(hit.article);
            }
        }
        for (const auto& stray : selected) {
            log::warn("selector cited article " + stray + " outside the candidate list; dropped");
        }
        return out;
    }
    throw Error(ErrorCode::SelectorOutputInvalid, last_error);
}

}  // namespace apbench::kb
