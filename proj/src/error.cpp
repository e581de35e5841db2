#include "excolex/error.hpp"

namespace excolex {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ContractViolation: return "ContractViolation";
    case ErrorKind::InsufficientMonomials: return "InsufficientMonomials";
    case ErrorKind::EmptyShadowDomain: return "EmptyShadowDomain";
    case ErrorKind::AmbientCapExceeded: return "AmbientCapExceeded";
    case ErrorKind::NotARevlexSegment: return "NotARevlexSegment";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::FormulaInapplicable: return "FormulaInapplicable";
    case ErrorKind::ProfileMismatch: return "ProfileMismatch";
    case ErrorKind::OracleTooLarge: return "OracleTooLarge";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace excolex
