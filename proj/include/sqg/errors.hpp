#pragma once

#include <stdexcept>
#include <string>

namespace sqg {

// Exit-code families used by the CLI (see tools/): 2 config, 3 grid/Nyquist,
// 4 history, 5 residual-check failure, 6 infeasible parameters.

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NyquistOverflow : GridError {
    using GridError::GridError;
};
struct GridBound : GridError {
    using GridError::GridError;
};
struct ScaleTooFine : GridError {
    using GridError::GridError;
};
struct TimeGridTooCoarse : GridError {
    using GridError::GridError;
};
struct DeepModeTooLarge : GridError {
    using GridError::GridError;
};

struct HistoryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InsufficientHistory : HistoryError {
    using HistoryError::HistoryError;
};
struct HorizonTooShort : HistoryError {
    using HistoryError::HistoryError;
};
struct OutOfWindow : HistoryError {
    using HistoryError::HistoryError;
};

struct ResidualCheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonMeanZeroNegativePower : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonRealField : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonRealOutput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegenerateFamily : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct OutsideGeometricBall : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ProfileBoundViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CFLViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Overflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MissingArtifact : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sqg
