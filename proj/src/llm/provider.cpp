#include "apbench/llm/provider.hpp"

#include "apbench/errors.hpp"
#include "apbench/util/utf8.hpp"

#include <cmath>

namespace apbench::llm {

const char* to_string(Role role) {
    switch (role) {
        case Role::Issue: return "issue";
        case Role::Retrieval: return "retrieval";
        case Role::Prediction: return "prediction";
        case Role::Writing: return "writing";
        case Role::Annotator: return "annotator";
        case Role::Validator: return "validator";
        case Role::Judge: return "judge";
        case Role::Embedder: return "embedder";
    }
    return "unknown";
}

Role role_from_string(const std::string& s) {
    if (s == "issue") return Role::Issue;
    if (s == "retrieval") return Role::Retrieval;
    if (s == "prediction") return Role::Prediction;
    if (s == "writing") return Role::Writing;
    if (s == "annotator") return Role::Annotator;
    if (s == "validator") return Role::Validator;
    if (s == "judge") return Role::Judge;
    if (s == "embedder") return Role::Embedder;
    throw Error(ErrorCode::ConfigError, "unknown role '" + s + "'");
}

double EmbeddingVector::norm() const {
    double sum = 0.0;
    for (double v : values) sum += v * v;
    return std::sqrt(sum);
}

EmbeddingVector EmbeddingVector::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw Error(ErrorCode::ZeroVector, "cannot normalize a zero vector");
    }
    EmbeddingVector out;
    out.values.reserve(values.size());
    for (double v : values) out.values.push_back(v / n);
    return out;
}

std::string ChatProvider::complete(const std::string& system, const std::string& user) {
    const auto& cfg = config();
    const std::size_t budget = cfg.max_context_chars;
    const std::size_t system_len = utf8::length(system);
    if (system_len >= budget) {
        throw Error(ErrorCode::ContextOverflowAfterTruncation,
                    "system prompt alone exceeds max_context_chars (" +
                        std::to_string(system_len) + " >= " + std::to_string(budget) + ")");
    }
    const std::size_t user_budget = budget - system_len;
    if (utf8::length(user) > user_budget) {
        return complete_raw(system, std::string(utf8::prefix(user, user_budget)));
    }
    return complete_raw(system, user);
}

ScriptedChatProvider::ScriptedChatProvider(std::vector<std::string> replies, ProviderConfig cfg)
    : config_(std::move(cfg)) {
    for (auto& r : replies) replies_.push_back(std::move(r));
    if (!replies_.empty()) last_reply_ = replies_.back();
}

ScriptedChatProvider::ScriptedChatProvider(Responder responder, ProviderConfig cfg)
    : config_(std::move(cfg)), responder_(std::move(responder)) {}

std::string ScriptedChatProvider::complete_raw(const std::string& system,
                                               const std::string& user) {
    std::lock_guard<std::mutex> lock(mutex_);
    ++calls_;
    transcript_.emplace_back(system, user);
    if (responder_) return responder_(system, user);
    if (replies_.empty()) return last_reply_;
    std::string reply = std::move(replies_.front());
    replies_.pop_front();
    return reply;
}

ScriptedEmbedder::ScriptedEmbedder(Fn fn, ProviderConfig cfg)
    : config_(std::move(cfg)), fn_(std::move(fn)) {}

std::vector<EmbeddingVector> ScriptedEmbedder::embed(const std::vector<std::string>& texts) {
    if (texts.empty()) {
        throw Error(ErrorCode::EmptySide, "embed() requires at least one text");
    }
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(fn_(t));
    std::size_t dim = out.front().dim();
    for (const auto& v : out) {
        if (v.dim() != dim) {
            throw Error(ErrorCode::DimensionMismatch, "embedder returned ragged vectors");
        }
    }
    return out;
}

}  // namespace apbench::llm
