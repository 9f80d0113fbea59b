#pragma once

#include <stdexcept>
#include <string>

namespace ringged {

/// Raised when input data or arguments violate a documented contract.
/// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ringged
