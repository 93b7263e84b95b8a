#include "lexmorse/error.hpp"

namespace lexmorse {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::CycleDetected: return "CycleDetected";
        case ErrorCode::MultipleMinima: return "MultipleMinima";
        case ErrorCode::MultipleMaxima: return "MultipleMaxima";
        case ErrorCode::NonReducedCover: return "NonReducedCover";
        case ErrorCode::IsolatedElement: return "IsolatedElement";
        case ErrorCode::UnknownElement: return "UnknownElement";
        case ErrorCode::NotComparable: return "NotComparable";
        case ErrorCode::EmptyInterval: return "EmptyInterval";
        case ErrorCode::DuplicateLabelSequence: return "DuplicateLabelSequence";
        case ErrorCode::MissingLabel: return "MissingLabel";
        case ErrorCode::NonIntervalOverlap: return "NonIntervalOverlap";
        case ErrorCode::UnexpectedHomology: return "UnexpectedHomology";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotUnique: return "NotUnique";
        case ErrorCode::NotAShelling: return "NotAShelling";
        case ErrorCode::BlockNotPresent: return "BlockNotPresent";
        case ErrorCode::MalformedNotation: return "MalformedNotation";
        case ErrorCode::InconsistentSubscripts: return "InconsistentSubscripts";
        case ErrorCode::WindowTooLow: return "WindowTooLow";
        case ErrorCode::TrivialInterval: return "TrivialInterval";
        case ErrorCode::NotSkipped: return "NotSkipped";
        case ErrorCode::NoNontrivialInterval: return "NoNontrivialInterval";
        case ErrorCode::PartnerNotCritical: return "PartnerNotCritical";
        case ErrorCode::PairingConflict: return "PairingConflict";
        case ErrorCode::NotHookShaped: return "NotHookShaped";
        case ErrorCode::BoundExceeded: return "BoundExceeded";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace lexmorse
