#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lexmorse {

enum class ErrorCode {
    InvalidArgument,
    CycleDetected,
    MultipleMinima,
    MultipleMaxima,
    NonReducedCover,
    IsolatedElement,
    UnknownElement,
    NotComparable,
    EmptyInterval,
    DuplicateLabelSequence,
    MissingLabel,
    NonIntervalOverlap,
    UnexpectedHomology,
    DimensionMismatch,
    NotUnique,
    NotAShelling,
    BlockNotPresent,
    MalformedNotation,
    InconsistentSubscripts,
    WindowTooLow,
    TrivialInterval,
    NotSkipped,
    NoNontrivialInterval,
    PartnerNotCritical,
    PairingConflict,
    NotHookShaped,
    BoundExceeded,
    ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace lexmorse
