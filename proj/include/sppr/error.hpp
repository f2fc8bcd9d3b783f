#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sppr {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Raised when an enumeration expands more walk prefixes than allowed.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::size_t limit)
      : Error("budget exceeded: more than " + std::to_string(limit) +
              " expanded walk prefixes"),
        limit_(limit) {}

  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

class CycleError : public Error {
 public:
  explicit CycleError(std::vector<std::size_t> cycle)
      : Error(describe(cycle)), cycle_(std::move(cycle)) {}

  // Closed vertex sequence, first vertex repeated at the end.
  const std::vector<std::size_t>& cycle() const noexcept { return cycle_; }

 private:
  static std::string describe(const std::vector<std::size_t>& c) {
    std::string s = "graph has a cycle:";
    for (auto v : c) s += " " + std::to_string(v);
    return s;
  }

  std::vector<std::size_t> cycle_;
};

}  // namespace sppr
