#ifndef PFBI_ERRORS_HPP
#define PFBI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pfbi {

// Base class for all pfbi errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad or inconsistent input data (files, shapes, empty sets). CLI exit code 2.
struct DataError : Error {
    using Error::Error;
};

// Numerical breakdown (factorizations, divergent training, weight collapse).
// CLI exit code 3.
struct NumericError : Error {
    using Error::Error;
};

struct ParseError : DataError {
    using DataError::DataError;
};

struct DimensionMismatch : DataError {
    using DataError::DataError;
};

struct EmptyDataset : DataError {
    using DataError::DataError;
};

struct InsufficientSamples : DataError {
    using DataError::DataError;
};

struct IoError : DataError {
    using DataError::DataError;
};

struct FactorizationFailure : NumericError {
    using NumericError::NumericError;
};

struct NonFiniteLoss : NumericError {
    using NumericError::NumericError;
};

struct DegenerateWeights : NumericError {
    using NumericError::NumericError;
};

}  // namespace pfbi

#endif  // PFBI_ERRORS_HPP
