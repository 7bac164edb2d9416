#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bfmlift {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a Groebner computation exceeds its step bound. Callers turn it
/// into an INCONCLUSIVE verdict; it is never swallowed into a partial result.
struct BudgetExceeded : Error {
  explicit BudgetExceeded(std::size_t steps)
      : Error("budget exceeded after " + std::to_string(steps) + " reduction steps"), steps(steps) {}
  std::size_t steps;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position(position) {}
  std::size_t position;
};

}  // namespace bfmlift
