#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace specht {

/// Thrown for invalid combinatorial input (bad shapes, label clashes, ...).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a computation exceeds a configured degree or time cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace specht
