#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace superlum {

enum class ErrorCode {
    BranchSpeedViolation,
    NonpositiveK,
    ZeroVelocity,
    DegenerateA,
    NotConstant,
    PoleError,
    MixedK,
    NotRepresentable,
    ZeroExtent,
    CyclicDiagram,
    IsolatedEvent,
    InvalidDiagram,
    SuperluminalSegment,
    InvalidPath,
    TruncationInsufficient,
    InvalidArgument,
    Schema,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every precondition failure in the library surfaces as this exception.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace superlum
