#pragma once

#include <stdexcept>
#include <string>

namespace sftc {

// Input that violates a data contract (schema, structure, markers). The CLI
// maps these to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Whole-corpus problems such as duplicate ids.
class CorpusError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Metadata that disagrees with itself (chunk plans, chunk counts).
class ConsistencyError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A unit set that cannot be reassembled because pieces are missing.
class IncompleteError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unreadable files, bad configuration values. Exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BackendError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by bt_fit when the preference graph admits no finite maximizer.
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sftc
