#pragma once

#include <stdexcept>
#include <string>

namespace daglca {

// Base class for all library errors. Subclasses carry the failure kind in
// the type so callers can map them to exit codes or retry policies.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CycleDetected : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct RetryLimitExceeded : Error {
    using Error::Error;
};

struct InvalidBlockSize : Error {
    using Error::Error;
};

struct PartitionMismatch : Error {
    using Error::Error;
};

struct NotFourPartite : Error {
    using Error::Error;
};

struct SolverContractViolation : Error {
    using Error::Error;
};

struct InvalidParams : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace daglca
