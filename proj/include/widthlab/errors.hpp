#pragma once

#include <stdexcept>
#include <string>

namespace widthlab {

// Thrown when an exact computation is requested above its enumeration cap.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a numeric solver gives up (distinct from "infeasible").
class SolverFailureError : public std::runtime_error {
 public:
  explicit SolverFailureError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an internal consistency guarantee is violated; always a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace widthlab
