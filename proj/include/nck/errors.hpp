#pragma once

#include <stdexcept>
#include <string>

namespace nck {

// Raised when an operation would need simplices above the stored truncation.
struct truncation_error : std::runtime_error {
  explicit truncation_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a documented precondition fails (e.g. a space is not 1-ordered).
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an enumeration would exceed a configured bound.
struct resource_limit_error : std::runtime_error {
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nck
