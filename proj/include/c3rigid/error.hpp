#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace c3rigid {

enum class ErrorCode {
    SchemaError,
    LoopOrDuplicateEdge,
    NotAPermutation,
    NotOrderThree,
    NotAnAutomorphism,
    MissingAction,
    TooFewVertices,
    TooLarge,
    InvalidAnchor,
    DegenerateMove,
    MissingEdge,
    FixedAnchor,
    NotIsostatic,
    AtBaseCase,
    IntermediateNotTight,
    InternalInvariantBroken,
    DivisionByZero,
    FixedVertexPresent,
    ExhaustedRetries,
    DegenerateSpan,
    InvalidPartition,
    ZeroDirection,
    NoSeparableComponent,
    ExhaustedT,
    InvalidParameter,
    CoincidentAdjacentJoints,
    IoError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` is stable and
// is what the CLI serializes.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace c3rigid
