#pragma once

#include "apbench/llm/provider.hpp"

#include <memory>

namespace httplib {
class Client;
}

namespace apbench::llm {

// OpenAI-compatible chat completion client. Transport failures and 5xx/429
// responses retry with exponential backoff up to cfg.retry_budget, then
// surface as ProviderUnavailable.
class HttpChatProvider : public ChatProvider {
public:
    explicit HttpChatProvider(ProviderConfig cfg);
    ~HttpChatProvider() override;

    const ProviderConfig& config() const override { return config_; }

protected:
    std::string complete_raw(const std::string& system, const std::string& user) override;

private:
    ProviderConfig config_;
    std::string base_path_;
    std::unique_ptr<httplib::Client> client_;
};

class HttpEmbedder : public Embedder {
public:
    explicit HttpEmbedder(ProviderConfig cfg);
    ~HttpEmbedder() override;

    std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) override;

    const ProviderConfig& config() const override { return config_; }

private:
    ProviderConfig config_;
    std::string base_path_;
    std::unique_ptr<httplib::Client> client_;
};

}  // namespace apbench::llm
