#include "apbench/errors.hpp"

namespace apbench {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::ValidatorOutputInvalid: return "ValidatorOutputInvalid";
        case ErrorCode::AnnotatorOutputInvalid: return "AnnotatorOutputInvalid";
        case ErrorCode::InvalidEdit: return "InvalidEdit";
        case ErrorCode::ClassifierOutputInvalid: return "ClassifierOutputInvalid";
        case ErrorCode::ProviderUnavailable: return "ProviderUnavailable";
        case ErrorCode::ContextOverflowAfterTruncation: return "ContextOverflowAfterTruncation";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::Unparseable: return "Unparseable";
        case ErrorCode::SchemaViolation: return "SchemaViolation";
        case ErrorCode::ReplayMiss: return "ReplayMiss";
        case ErrorCode::DuplicateArticle: return "DuplicateArticle";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::EmptyIndex: return "EmptyIndex";
        case ErrorCode::SelectorOutputInvalid: return "SelectorOutputInvalid";
        case ErrorCode::AgentOutputInvalid: return "AgentOutputInvalid";
        case ErrorCode::EmptySide: return "EmptySide";
        case ErrorCode::JudgeOutputInvalid: return "JudgeOutputInvalid";
        case ErrorCode::EmptyResults: return "EmptyResults";
        case ErrorCode::EmptyDataset: return "EmptyDataset";
        case ErrorCode::InsufficientClass: return "InsufficientClass";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

}  // namespace apbench
