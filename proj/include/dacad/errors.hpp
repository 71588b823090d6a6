#pragma once

#include <stdexcept>
#include <string>

namespace dacad {

// Dimension/shape contract violations (bad operand shapes, mismatched
// architectures, non-image data passed to image ops).
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed files: bad magic, truncated payload, checksum mismatch.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite values where the contract requires finite ones (divergence,
// NaN loss).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid experiment configuration; message names the offending field.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dacad
