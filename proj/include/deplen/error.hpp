#pragma once

// Error hierarchy shared by every module. The CLI maps the category of an
// error to its exit code, so each thrower picks the narrowest class.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace deplen {

enum class ErrorCategory {
  usage,  // bad arguments, invalid configuration
  data,   // input parsed but unusable: malformed lines, no data, domain violations
  io,     // file system
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

// Malformed CoNLL-U line. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCategory::data, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A token structure that cannot describe word positions at all
// (head out of range, invalid edge list).
class StructuralError : public Error {
 public:
  explicit StructuralError(const std::string& what) : Error(ErrorCategory::data, what) {}
};

// Argument outside the mathematical domain of a formula.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCategory::data, what) {}
};

// An estimator was asked for a value on an empty population.
class NoDataError : public Error {
 public:
  explicit NoDataError(const std::string& what) : Error(ErrorCategory::data, what) {}
};

// Exhaustive enumeration requested beyond its size guard.
class SizeError : public Error {
 public:
  explicit SizeError(const std::string& what) : Error(ErrorCategory::usage, what) {}
};

// A closed form was requested outside the assumptions it was derived under.
class AssumptionError : public Error {
 public:
  explicit AssumptionError(const std::string& what) : Error(ErrorCategory::usage, what) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ErrorCategory::usage, what) {}
};

// Fit results that do not describe the same sample.
class ComparisonError : public Error {
 public:
  explicit ComparisonError(const std::string& what) : Error(ErrorCategory::usage, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCategory::io, what) {}
};

}  // namespace deplen
