#include "apbench/llm/stub_provider.hpp"

#include "apbench/util/rng.hpp"

#include <json.hpp>

#include <cstdio>

namespace apbench::llm {

namespace {

using json = nlohmann::json;

bool contains(const std::string& haystack, const char* needle) {
    return haystack.find(needle) != std::string::npos;
}

std::string short_hash(const std::string& text) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%08x", static_cast<unsigned>(rng::fnv1a(text) & 0xFFFFFFFFu));
    return buf;
}

// Reversal heuristic shared by the annotator/predictor/writer stubs: the
// synthetic fixtures mark affirmed appeals with 维持原判 and reversals with
// 撤销; pipeline inputs without a second-instance text signal reversal via a
// non-empty new-evidence block.
bool smells_reversed(const std::string& user) {
    if (contains(user, "维持原判") && !contains(user, "撤销")) return false;
    if (contains(user, "撤销")) return true;
    return !contains(user, "（无新证据）") && contains(user, "新证据");
}

std::string answer_validator(const std::string& user) {
    return json{{"is_same_case", true},
                {"confidence_score", 9},
                {"reasoning", "当事人、案由与原审案号均对应一致（摘要" + short_hash(user) + "）"}}
        .dump();
}

std::string answer_annotator(const std::string& user) {
    const bool reversed = smells_reversed(user);
    json first_instance = {
        {"facts", "原审查明双方因合同履行发生争议，经审理确认了主要交易事实。"},
        {"disputed_issues", "双方对款项支付责任的认定存在争议。"},
        {"legal_articles", json::array({"《中华人民共和国民法典》第五百七十七条"})},
        {"judgment", "判令被告承担付款责任。"}};
    json second_instance = {
        {"new_facts", reversed ? "二审调取执法记录仪等新证据，证明原审认定的损失范围有误。" : ""},
        {"disputed_issues", "原判认定事实与适用法律是否正确。"},
        {"legal_articles",
         reversed ? json::array({"《中华人民共和国民事诉讼法》第一百七十条"})
                  : json::array({"《中华人民共和国民事诉讼法》第一百七十七条"})},
        {"judgment", reversed ? "撤销原判，依法改判。" : "驳回上诉，维持原判。"}};
    return json{{"reasoning_trace",
                 "比对两审文书的当事人、事实与裁判结果后得出结论（摘要" + short_hash(user) + "）"},
                {"confidence_score", 0.9},
                {"is_reversal", reversed},
                {"first_instance", first_instance},
                {"second_instance", second_instance},
                {"reason_for_reversal",
                 reversed ? "原审对关键事实认定错误，新证据足以推翻原认定。" : ""}}
        .dump();
}

std::string answer_rationale(const std::string& user) {
    const char* category = "fact_finding";
    if (contains(user, "程序")) {
        category = "procedural";
    } else if (contains(user, "适用法律错误") || contains(user, "法律适用错误")) {
        category = "law_application";
    }
    return json{{"category", category}}.dump();
}

std::string answer_issue(const std::string& user) {
    return json{{"issues",
                 json::array({"原审认定的事实是否因新证据而需要纠正（争点" + short_hash(user) + "）",
                              "原审适用法律及责任划分是否正确"})}}
        .dump();
}

// Selector prompts list candidates as lines carrying [id:...] tags; the stub
// keeps the first two.
std::string answer_selector(const std::string& user) {
    json ids = json::array();
    std::size_t pos = 0;
    while (ids.size() < 2) {
        pos = user.find("[id:", pos);
        if (pos == std::string::npos) break;
        pos += 4;
        const auto end = user.find(']', pos);
        if (end == std::string::npos) break;
        ids.push_back(user.substr(pos, end - pos));
        pos = end;
    }
    return json{{"selected_article_ids", ids}}.dump();
}

std::string answer_prediction(const std::string& user) {
    const bool reversed = smells_reversed(user);
    return json{{"direction", reversed ? "reverse" : "affirm"},
                {"rationale", reversed ? "新证据动摇了原审事实认定，应予改判。"
                                       : "上诉理由不能成立，原判认定事实清楚。"}}
        .dump();
}

std::string answer_writer(const std::string& user) {
    bool reversed;
    if (contains(user, "预测方向：维持原判")) {
        reversed = false;
    } else if (contains(user, "预测方向：撤销改判")) {
        reversed = true;
    } else {
        reversed = smells_reversed(user);
    }
    const std::string tag = short_hash(user);
    std::string doc = "本院依法组成合议庭审理了本案（卷号" + tag + "）。";
    doc += "经审理查明，原审认定的基本事实属实";
    doc += reversed ? "，但二审中出现的新证据改变了关键事实的认定。" : "，二审中无新的事实出现。";
    doc += "本院认为，";
    doc += reversed ? "原审判决认定事实有误，上诉请求部分成立。"
                    : "原审判决认定事实清楚，适用法律正确。";
    doc += "判决如下：";
    doc += reversed ? "一、撤销原审民事判决；二、改判驳回对超出部分的诉讼请求。"
                    : "驳回上诉，维持原判。";
    doc += "本判决为终审判决。";
    return doc;
}

std::string answer_judge(const std::string& user) {
    const std::uint64_t h = rng::fnv1a(user);
    auto score = [&](int shift) { return static_cast<int>(2 + ((h >> shift) & 0x3)); };
    return json{{"verdict_score", score(3)},
                {"fact_score", score(7)},
                {"law_score", score(11)},
                {"logic_score", score(17)},
                {"justification", "裁判方向与要点基本吻合，细节表述存在出入。"}}
        .dump();
}

}  // namespace

StubChatProvider::StubChatProvider(ProviderConfig cfg) : config_(std::move(cfg)) {}

std::string StubChatProvider::complete_raw(const std::string& system, const std::string& user) {
    (void)system;
    // Direction queries can reach the judge-role provider; detect them by the
    // classifier instruction marker before falling back to role dispatch.
    if (contains(user, "请判断该判决书的裁判方向")) {
        return answer_prediction(user);
    }
    switch (config_.role) {
        case Role::Validator: return answer_validator(user);
        case Role::Annotator:
            if (contains(user, "归类为以下三类之一")) return answer_rationale(user);
            return answer_annotator(user);
        case Role::Issue: return answer_issue(user);
        case Role::Retrieval: return answer_selector(user);
        case Role::Prediction: return answer_prediction(user);
        case Role::Writing: return answer_writer(user);
        case Role::Judge: return answer_judge(user);
        case Role::Embedder: break;
    }
    return "OK";
}

StubEmbedder::StubEmbedder(ProviderConfig cfg, std::size_t dim)
    : config_(std::move(cfg)), dim_(dim) {}

EmbeddingVector StubEmbedder::embed_one(const std::string& text, std::size_t dim) {
    EmbeddingVector v;
    v.values.reserve(dim);
    std::uint64_t state = rng::fnv1a(text);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::uint64_t bits = rng::splitmix64(state);
        // top 53 bits -> [0,1) -> [-1,1)
        const double unit = static_cast<double>(bits >> 11) * (1.0 / 9007199254740992.0);
        v.values.push_back(unit * 2.0 - 1.0);
    }
    return v;
}

std::vector<EmbeddingVector> StubEmbedder::embed(const std::vector<std::string>& texts) {
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(embed_one(t, dim_));
    return out;
}

}  // namespace apbench::llm
