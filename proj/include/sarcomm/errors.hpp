// errors.hpp -- exception types mapped to CLI exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace sarcomm {

// Bad or inconsistent scenario configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or mismatched file artifact (CLI exit code 3).
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical-validity failure in produced results (CLI exit code 4).
struct ValidityError : std::runtime_error {
  explicit ValidityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sarcomm
