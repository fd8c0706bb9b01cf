#include "apbench/llm/http_provider.hpp"

#include "apbench/errors.hpp"

#include <json.hpp>

#ifdef APBENCH_HTTPS
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include <chrono>
#include <thread>

namespace apbench::llm {

namespace {

using json = nlohmann::json;

// "http://host:1234/v1" -> origin "http://host:1234", path "/v1"
std::pair<std::string, std::string> split_endpoint(const std::string& endpoint) {
    const auto scheme_end = endpoint.find("://");
    if (scheme_end == std::string::npos) {
        throw Error(ErrorCode::ConfigError, "endpoint must include a scheme: " + endpoint);
    }
    const auto path_start = endpoint.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {endpoint, ""};
    std::string path = endpoint.substr(path_start);
    while (!path.empty() && path.back() == '/') path.pop_back();
    return {endpoint.substr(0, path_start), path};
}

std::unique_ptr<httplib::Client> make_client(const ProviderConfig& cfg,
                                             std::string& base_path) {
    auto [origin, path] = split_endpoint(cfg.endpoint);
    base_path = std::move(path);
    auto client = std::make_unique<httplib::Client>(origin);
    client->set_connection_timeout(0, cfg.timeout_ms * 1000LL);
    client->set_read_timeout(cfg.timeout_ms / 1000, (cfg.timeout_ms % 1000) * 1000);
    client->set_write_timeout(cfg.timeout_ms / 1000, (cfg.timeout_ms % 1000) * 1000);
    if (!cfg.api_key.empty()) {
        client->set_default_headers({{"Authorization", "Bearer " + cfg.api_key}});
    }
    return client;
}

bool retryable_status(int status) { return status == 429 || status >= 500; }

json post_with_retries(httplib::Client& client, const ProviderConfig& cfg,
                       const std::string& path, const json& body) {
    std::string last_failure;
    int delay_ms = cfg.backoff_initial_ms;
    for (int attempt = 0; attempt <= cfg.retry_budget; ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
            delay_ms *= 2;
        }
        auto res = client.Post(path, body.dump(), "application/json");
        if (!res) {
            last_failure = httplib::to_string(res.error());
            continue;
        }
        if (res->status == 200) {
            json parsed = json::parse(res->body, nullptr, /*allow_exceptions=*/false);
            if (parsed.is_discarded()) {
                last_failure = "non-JSON response body";
                continue;
            }
            return parsed;
        }
        last_failure = "HTTP " + std::to_string(res->status);
        if (!retryable_status(res->status)) break;
    }
    throw Error(ErrorCode::ProviderUnavailable,
                cfg.endpoint + path + " failed after " + std::to_string(cfg.retry_budget + 1) +
                    " attempts: " + last_failure);
}

}  // namespace

HttpChatProvider::HttpChatProvider(ProviderConfig cfg) : config_(std::move(cfg)) {
    client_ = make_client(config_, base_path_);
}

HttpChatProvider::~HttpChatProvider() = default;

std::string HttpChatProvider::complete_raw(const std::string& system, const std::string& user) {
    const json body = {{"model", config_.model_name},
                       {"temperature", config_.temperature},
                       {"messages",
                        {{{"role", "system"}, {"content", system}},
                         {{"role", "user"}, {"content", user}}}}};
    const json res = post_with_retries(*client_, config_, base_path_ + "/chat/completions", body);
    try {
        return res.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ProviderUnavailable,
                    std::string("malformed chat completion response: ") + e.what());
    }
}

HttpEmbedder::HttpEmbedder(ProviderConfig cfg) : config_(std::move(cfg)) {
    client_ = make_client(config_, base_path_);
}

HttpEmbedder::~HttpEmbedder() = default;

std::vector<EmbeddingVector> HttpEmbedder::embed(const std::vector<std::string>& texts) {
    if (texts.empty()) {
        throw Error(ErrorCode::EmptySide, "embed() requires at least one text");
    }
    const json body = {{"model", config_.model_name}, {"input", texts}};
    const json res = post_with_retries(*client_, config_, base_path_ + "/embeddings", body);

    std::vector<EmbeddingVector> out(texts.size());
    std::vector<bool> seen(texts.size(), false);
    try {
        const auto& data = res.at("data");
        if (data.size() != texts.size()) {
            throw Error(ErrorCode::DimensionMismatch,
                        "expected " + std::to_string(texts.size()) + " embeddings, got " +
                            std::to_string(data.size()));
        }
        for (const auto& item : data) {
            const auto index = item.at("index").get<std::size_t>();
            if (index >= out.size() || seen[index]) {
                throw Error(ErrorCode::DimensionMismatch, "bad embedding index in response");
            }
            out[index].values = item.at("embedding").get<std::vector<double>>();
            seen[index] = true;
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ProviderUnavailable,
                    std::string("malformed embedding response: ") + e.what());
    }
    const std::size_t dim = out.front().dim();
    for (const auto& v : out) {
        if (v.dim() != dim || dim == 0) {
            throw Error(ErrorCode::DimensionMismatch, "provider returned ragged vectors");
        }
    }
    return out;
}

}  // namespace apbench::llm
