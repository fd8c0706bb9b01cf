#include "apbench/llm/cache.hpp"

#include "apbench/errors.hpp"
#include "apbench/util/digest.hpp"
#include "apbench/util/jsonl.hpp"
#include "apbench/util/utf8.hpp"

#include <cstdio>

namespace apbench::llm {

std::string compute_cache_key(const std::string& model_name, double temperature,
                              const std::string& system_prompt,
                              const std::string& user_prompt) {
    char temp_buf[32];
    std::snprintf(temp_buf, sizeof(temp_buf), "%.6g", temperature);
    return digest::sha256_hex_fields({model_name, temp_buf, system_prompt, user_prompt});
}

ChatExchange make_exchange(const ProviderConfig& cfg, const std::string& system,
                           const std::string& user, const std::string& response) {
    ChatExchange ex;
    ex.system_prompt = system;
    ex.user_prompt = user;
    ex.response_text = response;
    ex.model_name = cfg.model_name;
    ex.temperature = cfg.temperature;
    ex.prompt_chars = utf8::length(system) + utf8::length(user);
    ex.response_chars = utf8::length(response);
    ex.cache_key = compute_cache_key(cfg.model_name, cfg.temperature, system, user);
    return ex;
}

const char* to_string(CacheMode mode) {
    switch (mode) {
        case CacheMode::Live: return "live";
        case CacheMode::Record: return "record";
        case CacheMode::Replay: return "replay";
    }
    return "unknown";
}

CacheMode cache_mode_from_string(const std::string& s) {
    if (s == "live") return CacheMode::Live;
    if (s == "record") return CacheMode::Record;
    if (s == "replay") return CacheMode::Replay;
    throw Error(ErrorCode::ConfigError, "unknown cache mode '" + s + "'");
}

CacheStore::CacheStore(std::filesystem::path journal_path)
    : journal_path_(std::move(journal_path)) {
    load();
}

void CacheStore::load() {
    if (journal_path_.empty() || !std::filesystem::exists(journal_path_)) return;
    for (const auto& row : jsonl::read_file(journal_path_)) {
        ChatExchange ex;
        ex.cache_key = row.at("key").get<std::string>();
        ex.model_name = row.at("model").get<std::string>();
        ex.temperature = row.at("temperature").get<double>();
        ex.system_prompt = row.at("system").get<std::string>();
        ex.user_prompt = row.at("user").get<std::string>();
        ex.response_text = row.at("response").get<std::string>();
        ex.prompt_chars = utf8::length(ex.system_prompt) + utf8::length(ex.user_prompt);
        ex.response_chars = utf8::length(ex.response_text);
        entries_[ex.cache_key] = std::move(ex);
    }
}

void CacheStore::put(const ChatExchange& exchange) {
    std::lock_guard<std::mutex> lock(mutex_);
    const bool fresh = entries_.find(exchange.cache_key) == entries_.end();
    entries_[exchange.cache_key] = exchange;
    if (fresh && !journal_path_.empty()) {
        jsonl::append_line(journal_path_, {{"key", exchange.cache_key},
                                           {"model", exchange.model_name},
                                           {"temperature", exchange.temperature},
                                           {"system", exchange.system_prompt},
                                           {"user", exchange.user_prompt},
                                           {"response", exchange.response_text}});
    }
}

std::optional<ChatExchange> CacheStore::get(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::size_t CacheStore::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.size();
}

CachingChatProvider::CachingChatProvider(std::shared_ptr<ChatProvider> inner,
                                         std::shared_ptr<CacheStore> store, CacheMode mode,
                                         ProviderConfig cfg)
    : inner_(std::move(inner)), store_(std::move(store)), mode_(mode), config_(std::move(cfg)) {}

std::string CachingChatProvider::complete_raw(const std::string& system,
                                              const std::string& user) {
    const std::string key =
        compute_cache_key(config_.model_name, config_.temperature, system, user);
    if (mode_ != CacheMode::Live) {
        if (auto hit = store_->get(key)) return hit->response_text;
        if (mode_ == CacheMode::Replay) {
            throw Error(ErrorCode::ReplayMiss, "no cached response for key " + key);
        }
    }
    if (!inner_) {
        throw Error(ErrorCode::ProviderUnavailable, "no live provider behind cache");
    }
    const std::string response = inner_->complete(system, user);
    if (mode_ == CacheMode::Record) {
        store_->put(make_exchange(config_, system, user, response));
    }
    return response;
}

}  // namespace apbench::llm
