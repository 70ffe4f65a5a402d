#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hycedis {

/// Shape or size mismatch between tensors / layers.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input outside the mathematical domain of an operation (empty sequence,
/// out-of-range index, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dataset-level problem: missing split, undersized category, missing trace.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid configuration value or unknown configuration key.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input file; carries the 1-based line number.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t line_number)
      : std::runtime_error(msg + " (line " + std::to_string(line_number) + ")"),
        line(line_number) {}
  std::size_t line;
};

/// Schema violation in an otherwise well-formed record.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operation called on an object in the wrong state (e.g. untrained model).
struct StateError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Numeric failure during training (non-finite loss or gradient).
struct TrainingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Metric undefined for the given inputs (e.g. single-class labels).
struct MetricError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Filesystem failure.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hycedis
