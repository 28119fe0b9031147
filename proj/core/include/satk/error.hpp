#pragma once

#include <stdexcept>
#include <string>

namespace satk {

/// Raised when an input is well formed but mathematically invalid for the
/// requested operation (non-dominant coweight, composite modulus, invalid
/// Cartan data, exceeded enumeration caps, ...).
///
/// `kind()` is a short machine-readable tag used by the CLI error object.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

}  // namespace satk
