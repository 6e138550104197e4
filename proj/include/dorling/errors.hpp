#ifndef DORLING_ERRORS_HPP
#define DORLING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dorling {

// Bad input data (missing fields, malformed geometry, duplicate ids).
struct DatasetError : std::runtime_error {
  explicit DatasetError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration or parameter combination.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Linear solver failure (singular or ill-conditioned system).
struct SolverError : std::runtime_error {
  explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dorling

#endif
