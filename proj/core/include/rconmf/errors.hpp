#pragma once

#include <stdexcept>
#include <string>

namespace rconmf {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid configuration: bad model order, infeasible generator settings, etc.
class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Bad input data: parse failures, degenerate scenes, non-finite entries.
class DataError : public Error {
public:
  explicit DataError(const std::string& msg) : Error(msg) {}
};

/// A caller broke an operation's preconditions (dimension mismatch and the like).
class ContractViolation : public Error {
public:
  explicit ContractViolation(const std::string& msg) : Error(msg) {}
};

}  // namespace rconmf
