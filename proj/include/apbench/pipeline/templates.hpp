#pragma once

#include "apbench/llm/prompt_budget.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace apbench::pipeline {

// Stage prompts live in external text files with named placeholders
// ({d_first}, {e_new}, {z_issue}, {z_law}, {z_verdict}, ...). The shipped
// defaults are compiled in from data/templates/; a run can override any of
// them from a directory. A placeholder's value arrives as one or more prompt
// segments, so budget fitting can distinguish expendable spans (first-
// instance body) from protected ones (verdict, new evidence, rationales).
class PromptTemplates {
public:
    // Compiled-in defaults.
    PromptTemplates();

    // Overrides <name>.txt files found in `dir` (e.g. issue.user.txt).
    void load_overrides(const std::filesystem::path& dir);

    const std::string& text(const std::string& name) const;

    // Digest over all template contents; part of the run config snapshot.
    std::string version() const;

    using Values = std::map<std::string, std::vector<llm::PromptSegment>>;

    // Splits the template around placeholders: scaffolding becomes protected
    // segments, placeholder values keep their own protect flags. Unknown
    // placeholders render empty.
    llm::SegmentedPrompt render(const std::string& name, const Values& values) const;

private:
    std::map<std::string, std::string> templates_;
};

}  // namespace apbench::pipeline
