#include "apbench/llm/prompt_budget.hpp"

#include "apbench/errors.hpp"
#include "apbench/util/utf8.hpp"

#include <algorithm>

namespace apbench::llm {

void SegmentedPrompt::add(std::string name, std::string text, bool protect) {
    segments_.push_back({std::move(name), std::move(text), protect});
}

std::size_t SegmentedPrompt::total_codepoints() const {
    std::size_t total = 0;
    for (const auto& seg : segments_) total += utf8::length(seg.text);
    return total;
}

void SegmentedPrompt::fit(std::size_t budget_codepoints) {
    std::size_t total = total_codepoints();
    while (total > budget_codepoints) {
        PromptSegment* longest = nullptr;
        std::size_t longest_len = 0;
        for (auto& seg : segments_) {
            if (seg.protect) continue;
            const std::size_t len = utf8::length(seg.text);
            if (len > longest_len) {
                longest_len = len;
                longest = &seg;
            }
        }
        if (!longest || longest_len == 0) {
            throw Error(ErrorCode::ContextOverflowAfterTruncation,
                        "protected prompt content exceeds budget (" + std::to_string(total) +
                            " > " + std::to_string(budget_codepoints) + ")");
        }
        const std::size_t overflow = total - budget_codepoints;
        const std::size_t cut = std::min(longest_len, overflow);
        longest->text = std::string(utf8::prefix(longest->text, longest_len - cut));
        total -= cut;
    }
}

std::string SegmentedPrompt::render() const {
    std::string out;
    for (const auto& seg : segments_) out += seg.text;
    return out;
}

}  // namespace apbench::llm
