#pragma once

#include <stdexcept>
#include <string>

namespace birfol {

enum class ErrorCode {
    division_by_zero,
    field_mismatch,
    ring_mismatch,
    not_divisible,
    inhomogeneous,
    not_euler,
    zero_result,
    non_unimodular,
    non_square,
    non_singular_point,
    invalid_argument,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::division_by_zero: return "division-by-zero";
    case ErrorCode::field_mismatch: return "field-mismatch";
    case ErrorCode::ring_mismatch: return "ring-mismatch";
    case ErrorCode::not_divisible: return "not-divisible";
    case ErrorCode::inhomogeneous: return "inhomogeneous";
    case ErrorCode::not_euler: return "not-euler";
    case ErrorCode::zero_result: return "zero-result";
    case ErrorCode::non_unimodular: return "non-unimodular";
    case ErrorCode::non_square: return "non-square";
    case ErrorCode::non_singular_point: return "non-singular-point";
    case ErrorCode::invalid_argument: return "invalid-argument";
    }
    return "unknown";
}

// Domain error raised by the algebra layer. The frontend reports these as
// assertion failures (or expected failures), never as internal errors.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace birfol
