#pragma once

#include <string>
#include <vector>

namespace apbench::llm {

// Prompt assembly under a character budget. A prompt is a list of named
// segments; when the total exceeds the budget, the longest expendable
// segment is tail-truncated first (then the next longest, and so on). Spans
// that must survive intact — the operative verdict, new-evidence text,
// instructions — are marked protected. Every truncation is prefix-preserving.
struct PromptSegment {
    std::string name;
    std::string text;
    bool protect = false;
};

class SegmentedPrompt {
public:
    void add(std::string name, std::string text, bool protect = false);

    // Shrinks expendable segments until total codepoints <= budget.
    // Throws ContextOverflowAfterTruncation when protected content alone
    // exceeds the budget.
    void fit(std::size_t budget_codepoints);

    std::string render() const;  // concatenation in insertion order

    std::size_t total_codepoints() const;
    const std::vector<PromptSegment>& segments() const { return segments_; }

private:
    std::vector<PromptSegment> segments_;
};

}  // namespace apbench::llm
