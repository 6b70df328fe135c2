#ifndef MTSP_ERRORS_HPP
#define MTSP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mtsp {

/// Malformed or out-of-range input: unknown node/arc, bad rational, missing arc value.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Objective suite does not meet an algorithm's requirements.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// A path operation was called on arguments that violate its precondition.
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// Brute-force enumeration exceeded its path budget.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Broken internal invariant (e.g. dangling label reference).
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mtsp

#endif  // MTSP_ERRORS_HPP
