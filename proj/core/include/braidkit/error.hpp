#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad word text, strand-count mismatch, invalid span.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A rewriting loop ran past its configured step budget. This is a resource
/// failure, never a verdict about the braid.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& what, std::size_t budget)
      : Error(what + ": step budget of " + std::to_string(budget) +
              " exhausted"),
        budget_(budget) {}

  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

}  // namespace braidkit
