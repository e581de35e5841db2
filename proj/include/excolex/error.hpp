#pragma once

#include <stdexcept>
#include <string>

namespace excolex {

enum class ErrorKind {
    ContractViolation,
    InsufficientMonomials,
    EmptyShadowDomain,
    AmbientCapExceeded,
    NotARevlexSegment,
    DegreeTooHigh,
    HypothesisViolated,
    FormulaInapplicable,
    ProfileMismatch,
    OracleTooLarge,
    Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// True for errors caused by hitting a configured size limit rather than bad input.
    bool is_resource_cap() const noexcept
    {
        return kind_ == ErrorKind::AmbientCapExceeded || kind_ == ErrorKind::OracleTooLarge;
    }

private:
    ErrorKind kind_;
};

}  // namespace excolex
