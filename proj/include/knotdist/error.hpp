#pragma once

#include <stdexcept>
#include <string>

namespace knotdist {

enum class ErrorCode {
    Parse,
    OddSize,
    NotUnimodularAntisymmetrization,
    NotUnimodular,
    SizeMismatch,
    BadEpsilon,
    NotDefinite,
    EmptyMatrix,
    ShapeMismatch,
    ZeroH,
    ZeroD,
    EvenDeterminant,
    OddSignature,
    DivisionByZero,
    InvalidArgument,
    UnknownLabel,
    Inconsistent,
};

// Recoverable input errors. Internal invariant violations use std::logic_error.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace knotdist
