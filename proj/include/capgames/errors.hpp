#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace capgames {

/// Input is well-formed but violates a game-model rule (invalid instance,
/// precondition failure, undefined quantity). Maps to CLI exit code 2.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// An exhaustive search would exceed the configured budget. Maps to CLI
/// exit code 3.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t budget, const std::string& estimate)
      : std::runtime_error(what + " (budget " + std::to_string(budget) + ", estimated size " +
                           estimate + ")"),
        budget_(budget),
        estimate_(estimate) {}

  std::uint64_t budget() const { return budget_; }
  const std::string& estimate() const { return estimate_; }

 private:
  std::uint64_t budget_;
  std::string estimate_;
};

/// Syntax error while parsing one of the strategy DSLs. Carries the 1-based
/// source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace capgames
