#pragma once

#include <stdexcept>
#include <string>

namespace cyclefog {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A call violated an operation contract (shape mismatch, bad dimensions).
struct ContractError : Error { using Error::Error; };

// A user-supplied parameter is out of its documented domain.
struct ParameterError : Error { using Error::Error; };

// Invalid configuration or dataset layout. Messages list every problem found.
struct ConfigError : Error { using Error::Error; };

struct DataError : Error { using Error::Error; };

struct IoError : Error { using Error::Error; };

// Sky fraction below the usable threshold; the caller is expected to fall
// back to the dark-channel airlight estimator.
struct InsufficientSkyError : Error { using Error::Error; };

struct CheckpointError : Error { using Error::Error; };

// A loss term went non-finite; `term` names the offending quantity.
struct TrainingAbort : Error {
  std::string term;
  TrainingAbort(std::string term_name, const std::string& msg)
      : Error(msg), term(std::move(term_name)) {}
};

}  // namespace cyclefog
