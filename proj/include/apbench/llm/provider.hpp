#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace apbench::llm {

// Every pipeline role maps to exactly one provider config.
enum class Role { Issue, Retrieval, Prediction, Writing, Annotator, Validator, Judge, Embedder };

const char* to_string(Role role);
Role role_from_string(const std::string& s);

struct ProviderConfig {
    Role role = Role::Writing;
    std::string endpoint;      // base URL of an OpenAI-compatible server
    std::string model_name;
    std::string api_key;       // resolved from config, may be empty
    double temperature = 0.1;  // paper-fixed decoding temperature
    std::size_t max_context_chars = 100000;  // codepoints, combined prompt budget
    int timeout_ms = 120000;
    int retry_budget = 2;      // transport retries beyond the first attempt
    int backoff_initial_ms = 250;
};

struct EmbeddingVector {
    std::vector<double> values;

    std::size_t dim() const { return values.size(); }
    double norm() const;
    // Returns a unit vector; throws ZeroVector on an all-zero input.
    EmbeddingVector normalized() const;
};

// Chat completion surface. complete() owns the context-budget guard: if the
// combined prompt exceeds max_context_chars the user prompt is tail-truncated
// (callers with section structure should pre-fit via SegmentedPrompt, which
// knows which spans are expendable). A system prompt alone over budget is
// ContextOverflowAfterTruncation.
class ChatProvider {
public:
    virtual ~ChatProvider() = default;

    std::string complete(const std::string& system, const std::string& user);

    virtual const ProviderConfig& config() const = 0;

protected:
    virtual std::string complete_raw(const std::string& system, const std::string& user) = 0;
};

class Embedder {
public:
    virtual ~Embedder() = default;

    // One vector per input, order-preserving, uniform dimension.
    virtual std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) = 0;

    virtual const ProviderConfig& config() const = 0;
};

// Test double: replies are consumed in order; the last one sticks. A response
// can also be computed from the prompt.
class ScriptedChatProvider : public ChatProvider {
public:
    using Responder = std::function<std::string(const std::string& system, const std::string& user)>;

    explicit ScriptedChatProvider(std::vector<std::string> replies, ProviderConfig cfg = {});
    explicit ScriptedChatProvider(Responder responder, ProviderConfig cfg = {});

    const ProviderConfig& config() const override { return config_; }

    int calls() const { return calls_; }
    const std::vector<std::pair<std::string, std::string>>& transcript() const {
        return transcript_;
    }

protected:
    std::string complete_raw(const std::string& system, const std::string& user) override;

private:
    ProviderConfig config_;
    std::deque<std::string> replies_;
    std::string last_reply_;
    Responder responder_;
    int calls_ = 0;
    std::vector<std::pair<std::string, std::string>> transcript_;
    std::mutex mutex_;
};

class ScriptedEmbedder : public Embedder {
public:
    using Fn = std::function<EmbeddingVector(const std::string& text)>;

    explicit ScriptedEmbedder(Fn fn, ProviderConfig cfg = {});

    std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) override;

    const ProviderConfig& config() const override { return config_; }

private:
    ProviderConfig config_;
    Fn fn_;
};

}  // namespace apbench::llm
