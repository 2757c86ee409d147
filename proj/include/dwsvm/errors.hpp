#pragma once

#include <stdexcept>
#include <string>

namespace dwsvm {

/// Malformed experiment config (bad key, missing field, unparsable value).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input data (CSV schema, model file, dimension mismatch on IO).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure (factorization breakdown, non-finite iterates).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dwsvm
