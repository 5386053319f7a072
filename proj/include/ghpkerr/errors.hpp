#pragma once

#include <stdexcept>
#include <string>

namespace ghpkerr {

/// Caller misuse: bad indices, invalid parameters, malformed requests.
/// Surfaces as exit code 2 at the CLI.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Evaluation outside a chart or operator domain (axis, horizon floor,
/// branch cut, singular value). Surfaces as exit code 3 at the CLI.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ghpkerr
