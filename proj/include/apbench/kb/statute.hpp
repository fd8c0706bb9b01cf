#pragma once

#include "apbench/llm/provider.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace apbench::kb {

using json = nlohmann::json;

struct StatuteArticle {
    std::string law_name;
    std::string article_number;
    std::string text;
    int effective_year = 2021;
    std::string article_id;  // stable digest of (law_name, article_number)

    static StatuteArticle make(std::string law_name, std::string article_number,
                               std::string text, int effective_year);
};

void to_json(json& j, const StatuteArticle& a);
void from_json(const json& j, StatuteArticle& a);

// Immutable after ingestion; vectors are stored unit-normalized so cosine
// against a normalized query is a plain dot product.
struct KBIndex {
    std::vector<StatuteArticle> articles;
    std::vector<llm::EmbeddingVector> vectors;
    std::size_t dim = 0;

    std::size_t size() const { return articles.size(); }
};

struct RetrievalHit {
    StatuteArticle article;
    double score = 0.0;  // cosine similarity in [-1, 1]
};

KBIndex ingest_statutes(const std::vector<StatuteArticle>& records, llm::Embedder& embedder);

double cosine(const llm::EmbeddingVector& a, const llm::EmbeddingVector& b);

// Exhaustive exact search: the k highest-cosine articles in non-increasing
// score order, ties broken by ascending article_id.
std::vector<RetrievalHit> coarse_search(const KBIndex& index, const std::string& query,
                                        llm::Embedder& embedder, std::size_t k = 10);

// Persistence: <dir>/manifest.json + articles.jsonl + vectors.f64 (flat
// little-endian doubles). Round-trips exactly.
void save_index(const KBIndex& index, const std::filesystem::path& dir);
KBIndex load_index(const std::filesystem::path& dir);

}  // namespace apbench::kb
