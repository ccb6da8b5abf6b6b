#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace galois {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together (degree mismatch, overlapping ground
/// sets, intransitive input to a transitive-only test, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  enum class Kind {
    RepeatedPoint,
    PointOutOfRange,
    MalformedParentheses,
    InvalidToken,
    BadHeader,
  };

  ParseError(Kind kind, std::size_t position, const std::string& what)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        kind_(kind),
        position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// A computation would exceed one of the configured work/memory budgets.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string budget, std::uint64_t requested, std::uint64_t limit)
      : Error(budget + " exceeded: need " + std::to_string(requested) + ", limit " +
              std::to_string(limit)),
        budget_(std::move(budget)),
        requested_(requested),
        limit_(limit) {}

  const std::string& budget() const noexcept { return budget_; }
  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::string budget_;
  std::uint64_t requested_;
  std::uint64_t limit_;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

/// A shipped data table does not match what it is supposed to describe.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Work limits shared by every module. All values are positive.
struct Budgets {
  std::uint64_t tuple_budget = 100'000'000;       // k^n or n^k tuples per partition
  std::uint64_t candidate_budget = 50'000'000;    // permutations filtered per closure
  std::uint64_t materialization_bound = 3'628'800;  // 10!
  std::uint64_t coloring_budget = 10'000'000;     // colorings tried by min_codomain
  unsigned workers = 1;
};

}  // namespace galois
