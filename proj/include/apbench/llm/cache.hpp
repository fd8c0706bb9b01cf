#pragma once

#include "apbench/llm/provider.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace apbench::llm {

// One completed chat call. cache_key is a pure function of
// (model_name, temperature, system_prompt, user_prompt).
struct ChatExchange {
    std::string system_prompt;
    std::string user_prompt;
    std::string response_text;
    std::string model_name;
    double temperature = 0.0;
    std::size_t prompt_chars = 0;
    std::size_t response_chars = 0;
    std::string cache_key;
};

std::string compute_cache_key(const std::string& model_name, double temperature,
                              const std::string& system_prompt, const std::string& user_prompt);

ChatExchange make_exchange(const ProviderConfig& cfg, const std::string& system,
                           const std::string& user, const std::string& response);

// live: providers only. record: consult cache, fall through to the provider
// and journal the result. replay: cache only, miss is an error.
enum class CacheMode { Live, Record, Replay };

const char* to_string(CacheMode mode);
CacheMode cache_mode_from_string(const std::string& s);

// On-disk map from cache_key to exchange, JSONL journal. Writes are
// last-write-wins on identical keys; values are identical by construction,
// so concurrent writers only cost duplicate journal lines.
class CacheStore {
public:
    CacheStore() = default;  // in-memory only
    explicit CacheStore(std::filesystem::path journal_path);

    void put(const ChatExchange& exchange);
    std::optional<ChatExchange> get(const std::string& key) const;

    std::size_t size() const;

private:
    void load();

    std::filesystem::path journal_path_;
    std::map<std::string, ChatExchange> entries_;
    mutable std::mutex mutex_;
};

// Wraps a provider with a cache under the given mode. In Replay mode the
// inner provider may be null and is never called.
class CachingChatProvider : public ChatProvider {
public:
    CachingChatProvider(std::shared_ptr<ChatProvider> inner, std::shared_ptr<CacheStore> store,
                        CacheMode mode, ProviderConfig cfg);

    const ProviderConfig& config() const override { return config_; }

protected:
    std::string complete_raw(const std::string& system, const std::string& user) override;

private:
    std::shared_ptr<ChatProvider> inner_;
    std::shared_ptr<CacheStore> store_;
    CacheMode mode_;
    ProviderConfig config_;
};

}  // namespace apbench::llm
