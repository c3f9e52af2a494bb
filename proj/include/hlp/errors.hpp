#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hlp {

/// Input file could not be tokenized; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Input contained no data pairs at all.
class EmptyInputError : public std::runtime_error {
 public:
  explicit EmptyInputError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Metric is undefined for the given graph (no edges: the 1/2m factor).
class UndefinedMetricError : public std::runtime_error {
 public:
  explicit UndefinedMetricError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A method that needs edge structure was handed a graph without any.
class DegenerateInputError : public std::runtime_error {
 public:
  explicit DegenerateInputError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace hlp
