#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mp2 {

using i64 = std::int64_t;
using i128 = __int128;

// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic left the representable range (should not happen on the
// supported parameter grids; indicates the caller pushed p/N far past
// desk scale).
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error(what) {}
};

// Invalid mathematical input (division by zero, non-unit where a unit is
// required, exceptional character where an irreducible one is required...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// A brute-force search exceeded its configured budget.
class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

// An iterative oracle failed to stabilize; diagnostic, indicates a bug.
class StabilizationError : public Error {
 public:
  explicit StabilizationError(const std::string& what) : Error(what) {}
};

// Three-valued logic for predicates the underlying theorems only pin down
// under hypotheses. Unknown is a first-class answer, distinct from False.
enum class Tri { False = 0, True = 1, Unknown = 2 };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    default: return "unknown";
  }
}

std::string i128_to_string(i128 v);

}  // namespace mp2
