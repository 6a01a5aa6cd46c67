#pragma once

#include <stdexcept>
#include <string>

namespace rekit {

enum class ErrorKind {
  invalid_input,
  invalid_comparison,
  unsupported_estimate,
  empty_input,
  infeasible,
  incomplete_catalog,
  invalid_weights,
  stale_action,
  invalid_hotlink,
};

const char* to_string(ErrorKind kind);

/// Every library failure is reported through this type. `kind()` lets the
/// CLI separate model-level infeasibility from malformed input.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rekit
