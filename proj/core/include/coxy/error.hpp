#pragma once

#include <stdexcept>
#include <string>

namespace coxy {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph or word text. `line()` is 0 when no line applies.
class ParseError : public Error {
public:
  ParseError(const std::string& what, int line = 0)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_;
};

class GraphError : public Error {
public:
  using Error::Error;
};

class UnknownLabel : public Error {
public:
  explicit UnknownLabel(const std::string& label)
    : Error("unknown label '" + label + "'"), label_(label) {}
  const std::string& label() const noexcept { return label_; }

private:
  std::string label_;
};

class SizeMismatch : public Error {
public:
  using Error::Error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

} // namespace coxy
