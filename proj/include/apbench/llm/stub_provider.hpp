#pragma once

#include "apbench/llm/provider.hpp"

namespace apbench::llm {

// Deterministic offline providers, selectable in config as kind "stub".
// Each role answers with schema-valid output computed purely from the
// prompt, so smoke runs and record/replay fixtures need no network and
// reproduce byte-for-byte. Not a model: the replies follow fixed rules
// keyed on marker phrases the synthetic fixtures plant.
class StubChatProvider : public ChatProvider {
public:
    explicit StubChatProvider(ProviderConfig cfg);

    const ProviderConfig& config() const override { return config_; }

protected:
    std::string complete_raw(const std::string& system, const std::string& user) override;

private:
    ProviderConfig config_;
};

// Hash-seeded embedding: identical texts map to identical vectors, distinct
// texts scatter. Dimension is fixed per instance.
class StubEmbedder : public Embedder {
public:
    explicit StubEmbedder(ProviderConfig cfg, std::size_t dim = 64);

    std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) override;

    const ProviderConfig& config() const override { return config_; }

    static EmbeddingVector embed_one(const std::string& text, std::size_t dim);

private:
    ProviderConfig config_;
    std::size_t dim_;
};

}  // namespace apbench::llm
