#ifndef WORDREP_ERROR_HPP
#define WORDREP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wordrep {

enum class ErrorCode {
    duplicate_label,
    unknown_endpoint,
    self_loop,
    not_bipartite,
    all_isolated,
    zero_side,
    too_small,
    same_letter,
    duplicate_subscript,
    missing_subscript,
    empty_word,
    complete_bipartite,
    has_isolated,
    no_edges,
    verification_failed,
    parse_error,
    count_mismatch,
    unverified_representation,
    bad_policy,
    no_linear_extension,
    invalid_argument,
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

} // namespace wordrep

#endif
