#include "superlum/error.hpp"

namespace superlum {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::BranchSpeedViolation: return "BranchSpeedViolation";
        case ErrorCode::NonpositiveK: return "NonpositiveK";
        case ErrorCode::ZeroVelocity: return "ZeroVelocity";
        case ErrorCode::DegenerateA: return "DegenerateA";
        case ErrorCode::NotConstant: return "NotConstant";
        case ErrorCode::PoleError: return "PoleError";
        case ErrorCode::MixedK: return "MixedK";
        case ErrorCode::NotRepresentable: return "NotRepresentable";
        case ErrorCode::ZeroExtent: return "ZeroExtent";
        case ErrorCode::CyclicDiagram: return "CyclicDiagram";
        case ErrorCode::IsolatedEvent: return "IsolatedEvent";
        case ErrorCode::InvalidDiagram: return "InvalidDiagram";
        case ErrorCode::SuperluminalSegment: return "SuperluminalSegment";
        case ErrorCode::InvalidPath: return "InvalidPath";
        case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Schema: return "Schema";
    }
    return "Unknown";
}

}  // namespace superlum
