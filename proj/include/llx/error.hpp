#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace llx {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error with a 1-based source position and the set of tokens
/// that would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message,
             std::vector<std::string> expected = {})
      : Error(format(line, column, message, expected)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string format(std::size_t line, std::size_t column,
                            const std::string& message,
                            const std::vector<std::string>& expected) {
    std::string out = std::to_string(line) + ":" + std::to_string(column) +
                      ": " + message;
    if (!expected.empty()) {
      out += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) out += i + 1 == expected.size() ? " or " : ", ";
        out += expected[i];
      }
      out += ")";
    }
    return out;
  }

  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// A formula that parses but lies outside the rule fragment.
class FragmentError : public Error {
 public:
  FragmentError(std::string reason, std::string offending)
      : Error(reason + ": " + offending),
        reason_(std::move(reason)),
        offending_(std::move(offending)) {}

  const std::string& reason() const { return reason_; }
  const std::string& offending() const { return offending_; }

 private:
  std::string reason_;
  std::string offending_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Structured document with a missing or ill-typed field. `path()` is a
/// dotted/indexed locator such as `rules[2].alternatives[0]`.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& message)
      : Error(path.empty() ? message : path + ": " + message),
        path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace llx
