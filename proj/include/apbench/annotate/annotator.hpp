#pragma once

#include "apbench/annotate/types.hpp"
#include "apbench/corpus/types.hpp"
#include "apbench/llm/provider.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace apbench::annotate {

// CoT annotation of a validated pair. The model's reasoning trace is kept
// verbatim; invariant-violating responses are normalized (reason cleared on
// non-reversals) with a warning rather than rejected. One reprompt on
// schema-invalid output, then AnnotatorOutputInvalid.
AnnotationRecord annotate_pair(const corpus::CasePair& pair, llm::ChatProvider& annotator);

// Pure check of the type invariants; empty means valid.
std::vector<std::string> validate_annotation(const AnnotationRecord& record);

struct GatedRecords {
    std::vector<AnnotationRecord> auto_accepted;
    std::vector<AnnotationRecord> queue;  // review_status flipped to PendingReview
};

// Partition by confidence < gamma (strict: a record at exactly gamma stays
// automatic). Union of the outputs is the input.
GatedRecords enqueue_low_confidence(std::vector<AnnotationRecord> records,
                                    const ReviewPolicy& policy);

struct ReviewDecision {
    enum class Kind { Accept, Edit, Reject };
    Kind kind = Kind::Accept;
    json edited_fields;  // top-level field overrides for Edit
    std::string editor;
};

// Accept/edit promote to HumanVerified (edits are revalidated; InvalidEdit on
// violation); reject returns nullopt — a tombstone excluded from the dataset.
std::optional<AnnotationRecord> apply_review(const AnnotationRecord& record,
                                             const ReviewDecision& decision);

// Maps free-text reversal grounds onto the fact/law/procedure trichotomy.
RationaleCategory classify_rationale(const std::string& reason_text,
                                     llm::ChatProvider& classifier);

}  // namespace apbench::annotate
