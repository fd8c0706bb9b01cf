#pragma once

#include "apbench/kb/statute.hpp"
#include "apbench/llm/provider.hpp"

#include <string>
#include <vector>

namespace apbench::kb {

// LLM pass over the coarse candidates: keeps only the articles that govern
// the identified issues. The output is a subset of `hits` in hit order —
// selector replies citing anything off-list are dropped with a warning. An
// empty selection is valid (the pipeline proceeds without statutes).
std::vector<StatuteArticle> fine_select(const std::vector<RetrievalHit>& hits,
                                        const std::vector<std::string>& issue_statements,
                                        llm::ChatProvider& selector);

}  // namespace apbench::kb
