#pragma once

#include <stdexcept>
#include <string>

namespace apbench {

// Error vocabulary shared across modules. Codes are stable identifiers:
// they end up in exclusion logs and per-case failure records.
enum class ErrorCode {
    // corpus
    DuplicateId,
    ValidatorOutputInvalid,
    // annotate
    AnnotatorOutputInvalid,
    InvalidEdit,
    ClassifierOutputInvalid,
    // llm
    ProviderUnavailable,
    ContextOverflowAfterTruncation,
    DimensionMismatch,
    Unparseable,
    SchemaViolation,
    ReplayMiss,
    // kb
    DuplicateArticle,
    ZeroVector,
    EmptyIndex,
    SelectorOutputInvalid,
    // pipeline
    AgentOutputInvalid,
    // eval
    EmptySide,
    JudgeOutputInvalid,
    EmptyResults,
    // harness
    EmptyDataset,
    InsufficientClass,
    ConfigError,
    IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace apbench
