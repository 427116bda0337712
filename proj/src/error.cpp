#include "wordrep/error.hpp"

namespace wordrep {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::duplicate_label: return "DuplicateLabel";
    case ErrorCode::unknown_endpoint: return "UnknownEndpoint";
    case ErrorCode::self_loop: return "SelfLoop";
    case ErrorCode::not_bipartite: return "NotBipartite";
    case ErrorCode::all_isolated: return "AllIsolated";
    case ErrorCode::zero_side: return "ZeroSide";
    case ErrorCode::too_small: return "TooSmall";
    case ErrorCode::same_letter: return "SameLetter";
    case ErrorCode::duplicate_subscript: return "DuplicateSubscript";
    case ErrorCode::missing_subscript: return "MissingSubscript";
    case ErrorCode::empty_word: return "EmptyWord";
    case ErrorCode::complete_bipartite: return "CompleteBipartite";
    case ErrorCode::has_isolated: return "HasIsolated";
    case ErrorCode::no_edges: return "NoEdges";
    case ErrorCode::verification_failed: return "VerificationFailed";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::count_mismatch: return "CountMismatch";
    case ErrorCode::unverified_representation: return "UnverifiedRepresentation";
    case ErrorCode::bad_policy: return "BadPolicy";
    case ErrorCode::no_linear_extension: return "NoLinearExtension";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace wordrep
