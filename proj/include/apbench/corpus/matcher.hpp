#pragma once

#include "apbench/corpus/case_id.hpp"
#include "apbench/corpus/types.hpp"
#include "apbench/llm/provider.hpp"

#include <vector>

namespace apbench::corpus {

struct MatchResult {
    std::vector<CasePair> pairs;        // candidates, pending semantic validation
    std::vector<Exclusion> exclusions;  // machine-readable audit of every drop
};

// Links each second-instance document to the first-instance document whose
// own identifier matches the one cited in the appellate text. Unresolved and
// ambiguous documents are excluded with a reason, never silently dropped.
MatchResult match_case_pairs(const std::vector<RawDocument>& firsts,
                             const std::vector<RawDocument>& seconds,
                             const CaseIdGrammar& grammar = {});

// Fills is_same_case / validation_confidence / validation_reasoning from the
// validator's structured response. One reprompt on malformed output, then
// ValidatorOutputInvalid.
CasePair validate_pair_semantics(CasePair pair, llm::ChatProvider& validator);

// Deterministic under seed; |subset| = round(rate * |pairs|).
std::vector<CasePair> sample_for_review(const std::vector<CasePair>& pairs, double rate,
                                        std::uint64_t seed);

}  // namespace apbench::corpus
