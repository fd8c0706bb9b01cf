#include "apbench/kb/statute.hpp"

#include "apbench/errors.hpp"
#include "apbench/util/digest.hpp"
#include "apbench/util/jsonl.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <numeric>
#include <set>

namespace apbench::kb {

StatuteArticle StatuteArticle::make(std::string law_name, std::string article_number,
                                    std::string text, int effective_year) {
    StatuteArticle a;
    a.article_id = digest::sha256_hex_fields({law_name, article_number}).substr(0, 16);
    a.law_name = std::move(law_name);
    a.article_number = std::move(article_number);
    a.text = std::move(text);
    a.effective_year = effective_year;
    return a;
}

void to_json(json& j, const StatuteArticle& a) {
    j = json{{"law_name", a.law_name},
             {"article_number", a.article_number},
             {"text", a.text},
             {"effective_year", a.effective_year}};
}

void from_json(const json& j, StatuteArticle& a) {
    a = StatuteArticle::make(j.at("law_name").get<std::string>(),
                             j.at("article_number").get<std::string>(),
                             j.at("text").get<std::string>(),
                             j.at("effective_year").get<int>());
}

KBIndex ingest_statutes(const std::vector<StatuteArticle>& records, llm::Embedder& embedder) {
    KBIndex index;
    if (records.empty()) return index;

    std::set<std::string> ids;
    std::vector<std::string> texts;
    texts.reserve(records.size());
    for (const auto& record : records) {
        if (record.text.empty()) {
            throw Error(ErrorCode::ConfigError,
                        "article " + record.law_name + " " + record.article_number +
                            " has empty text");
        }
        if (!ids.insert(record.article_id).second) {
            throw Error(ErrorCode::DuplicateArticle,
                        record.law_name + " " + record.article_number);
        }
        texts.push_back(record.text);
    }

    auto vectors = embedder.embed(texts);
    index.dim = vectors.front().dim();
    index.vectors.reserve(vectors.size());
    for (auto& v : vectors) {
        if (v.dim() != index.dim) {
            throw Error(ErrorCode::DimensionMismatch, "ragged embedding dimensions");
        }
        index.vectors.push_back(v.normalized());
    }
    index.articles = records;
    return index;
}

double cosine(const llm::EmbeddingVector& a, const llm::EmbeddingVector& b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
    const double na = a.norm();
    const double nb = b.norm();
    if (na == 0.0 || nb == 0.0) {
        throw Error(ErrorCode::ZeroVector, "cosine undefined for zero vectors");
    }
    const double dot =
        std::inner_product(a.values.begin(), a.values.end(), b.values.begin(), 0.0);
    return dot / (na * nb);
}

std::vector<RetrievalHit> coarse_search(const KBIndex& index, const std::string& query,
                                        llm::Embedder& embedder, std::size_t k) {
    if (index.size() == 0) {
        throw Error(ErrorCode::EmptyIndex, "cannot search an empty index");
    }
    if (k == 0) {
        throw std::invalid_argument("coarse_search: k must be >= 1");
    }
    const auto query_vec = embedder.embed({query}).front().normalized();
    if (query_vec.dim() != index.dim) {
        throw Error(ErrorCode::DimensionMismatch,
                    "query dim " + std::to_string(query_vec.dim()) + " vs index dim " +
                        std::to_string(index.dim));
    }

    std::vector<std::size_t> order(index.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> scores(index.size());
    for (std::size_t i = 0; i < index.size(); ++i) {
        scores[i] = std::inner_product(query_vec.values.begin(), query_vec.values.end(),
                                       index.vectors[i].values.begin(), 0.0);
    }
    const auto better = [&](std::size_t lhs, std::size_t rhs) {
        if (scores[lhs] != scores[rhs]) return scores[lhs] > scores[rhs];
        return index.articles[lhs].article_id < index.articles[rhs].article_id;
    };
    const std::size_t take = std::min(k, index.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take),
                      order.end(), better);

    std::vector<RetrievalHit> hits;
    hits.reserve(take);
    for (std::size_t i = 0; i < take; ++i) {
        hits.push_back({index.articles[order[i]], scores[order[i]]});
    }
    return hits;
}

namespace {
constexpr int kIndexFormatVersion = 1;
}

void save_index(const KBIndex& index, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);

    std::vector<json> rows;
    rows.reserve(index.size());
    for (const auto& a : index.articles) rows.push_back(json(a));
    jsonl::write_file(dir / "articles.jsonl", rows);

    std::ofstream vec(dir / "vectors.f64", std::ios::binary | std::ios::trunc);
    if (!vec) {
        throw Error(ErrorCode::IoError, "cannot write " + (dir / "vectors.f64").string());
    }
    static_assert(std::endian::native == std::endian::little,
                  "vector file format assumes little-endian doubles");
    for (const auto& v : index.vectors) {
        vec.write(reinterpret_cast<const char*>(v.values.data()),
                  static_cast<std::streamsize>(v.values.size() * sizeof(double)));
    }
    vec.close();

    std::ofstream manifest(dir / "manifest.json", std::ios::trunc);
    manifest << json{{"format_version", kIndexFormatVersion},
                     {"count", index.size()},
                     {"dim", index.dim}}
                    .dump(2)
             << '\n';
}

KBIndex load_index(const std::filesystem::path& dir) {
    std::ifstream manifest_in(dir / "manifest.json");
    if (!manifest_in) {
        throw Error(ErrorCode::IoError, "cannot open " + (dir / "manifest.json").string());
    }
    json manifest = json::parse(manifest_in, nullptr, /*allow_exceptions=*/false);
    if (manifest.is_discarded()) {
        throw Error(ErrorCode::IoError, "corrupt manifest in " + dir.string());
    }
    if (manifest.at("format_version").get<int>() != kIndexFormatVersion) {
        throw Error(ErrorCode::ConfigError, "unsupported index format version");
    }

    KBIndex index;
    index.dim = manifest.at("dim").get<std::size_t>();
    const auto count = manifest.at("count").get<std::size_t>();

    for (const auto& row : jsonl::read_file(dir / "articles.jsonl")) {
        index.articles.push_back(row.get<StatuteArticle>());
    }
    if (index.articles.size() != count) {
        throw Error(ErrorCode::IoError, "article count mismatch in " + dir.string());
    }

    std::ifstream vec(dir / "vectors.f64", std::ios::binary);
    if (!vec) {
        throw Error(ErrorCode::IoError, "cannot open " + (dir / "vectors.f64").string());
    }
    index.vectors.resize(count);
    for (auto& v : index.vectors) {
        v.values.resize(index.dim);
        vec.read(reinterpret_cast<char*>(v.values.data()),
                 static_cast<std::streamsize>(index.dim * sizeof(double)));
        if (!vec) {
            throw Error(ErrorCode::IoError, "vector file truncated in " + dir.string());
        }
    }
    return index;
}

}  // namespace apbench::kb
