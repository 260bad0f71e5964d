#pragma once

#include <stdexcept>
#include <string>

namespace kex {

// Base class for all library errors. The CLI maps these onto exit codes:
// DataError and subclasses -> 2, TrainingError and subclasses -> 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : Error {
  using Error::Error;
};

struct InputError : DataError {
  using DataError::DataError;
};

struct EmptyDocumentError : DataError {
  using DataError::DataError;
};

struct EmptyCandidatesError : DataError {
  using DataError::DataError;
};

struct EmptyGraphError : DataError {
  using DataError::DataError;
};

struct IngestError : DataError {
  using DataError::DataError;
};

struct ModelIoError : DataError {
  using DataError::DataError;
};

struct TrainingError : Error {
  using Error::Error;
};

struct BalanceError : TrainingError {
  using TrainingError::TrainingError;
};

}  // namespace kex
