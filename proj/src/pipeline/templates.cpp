#include "apbench/pipeline/templates.hpp"

#include "apbench/errors.hpp"
#include "apbench/util/digest.hpp"

#include <fstream>
#include <sstream>

namespace apbench::pipeline {

// Generated from data/templates/ at build time.
extern const std::map<std::string, std::string>& builtin_templates();

PromptTemplates::PromptTemplates() : templates_(builtin_templates()) {}

void PromptTemplates::load_overrides(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw Error(ErrorCode::ConfigError, "template directory not found: " + dir.string());
    }
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
        std::ifstream in(entry.path());
        std::ostringstream content;
        content << in.rdbuf();
        templates_[entry.path().stem().string()] = content.str();
    }
}

const std::string& PromptTemplates::text(const std::string& name) const {
    auto it = templates_.find(name);
    if (it == templates_.end()) {
        throw Error(ErrorCode::ConfigError, "unknown template '" + name + "'");
    }
    return it->second;
}

std::string PromptTemplates::version() const {
    std::vector<std::string_view> fields;
    for (const auto& [name, content] : templates_) {
        fields.push_back(name);
        fields.push_back(content);
    }
    return digest::sha256_hex_fields(fields).substr(0, 16);
}

llm::SegmentedPrompt PromptTemplates::render(const std::string& name,
                                             const Values& values) const {
    const std::string& tpl = text(name);
    llm::SegmentedPrompt prompt;
    std::size_t pos = 0;
    int scaffold_idx = 0;
    while (pos < tpl.size()) {
        const auto open = tpl.find('{', pos);
        if (open == std::string::npos) break;
        const auto close = tpl.find('}', open + 1);
        if (close == std::string::npos) break;
        const std::string key = tpl.substr(open + 1, close - open - 1);
        auto it = values.find(key);
        if (it == values.end()) {
            // Not a placeholder (templates contain literal JSON braces);
            // keep the text and continue scanning after the brace.
            prompt.add("scaffold" + std::to_string(scaffold_idx++),
                       tpl.substr(pos, open + 1 - pos), /*protect=*/true);
            pos = open + 1;
            continue;
        }
        prompt.add("scaffold" + std::to_string(scaffold_idx++), tpl.substr(pos, open - pos),
                   /*protect=*/true);
        for (const auto& seg : it->second) {
            prompt.add(seg.name, seg.text, seg.protect);
        }
        pos = close + 1;
    }
    prompt.add("scaffold" + std::to_string(scaffold_idx), tpl.substr(pos), /*protect=*/true);
    return prompt;
}

}  // namespace apbench::pipeline
