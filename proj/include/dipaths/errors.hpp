#ifndef DIPATHS_ERRORS_HPP
#define DIPATHS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dipaths {

enum class ErrorCode {
    NotATree,
    DuplicateArc,
    SelfLoop,
    BadVertexId,
    NotADipath,
    PathTreeMismatch,
    PathNotThroughCenter,
    PaletteTooSmall,
    PrecoloringNotStarShaped,
    PrecoloringConflict,
    EdgeNotInGraph,
    EdgeNotIncident,
    AnchorNotInEveryMaxMatching,
    IncompleteOrder,
    InconsistentOrder,
    InvalidInstance,
    InternalInvariantViolation,
    SizeLimit,
    ParseError,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotATree: return "NotATree";
        case ErrorCode::DuplicateArc: return "DuplicateArc";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::BadVertexId: return "BadVertexId";
        case ErrorCode::NotADipath: return "NotADipath";
        case ErrorCode::PathTreeMismatch: return "PathTreeMismatch";
        case ErrorCode::PathNotThroughCenter: return "PathNotThroughCenter";
        case ErrorCode::PaletteTooSmall: return "PaletteTooSmall";
        case ErrorCode::PrecoloringNotStarShaped: return "PrecoloringNotStarShaped";
        case ErrorCode::PrecoloringConflict: return "PrecoloringConflict";
        case ErrorCode::EdgeNotInGraph: return "EdgeNotInGraph";
        case ErrorCode::EdgeNotIncident: return "EdgeNotIncident";
        case ErrorCode::AnchorNotInEveryMaxMatching: return "AnchorNotInEveryMaxMatching";
        case ErrorCode::IncompleteOrder: return "IncompleteOrder";
        case ErrorCode::InconsistentOrder: return "InconsistentOrder";
        case ErrorCode::InvalidInstance: return "InvalidInstance";
        case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
        case ErrorCode::SizeLimit: return "SizeLimit";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace dipaths

#endif
