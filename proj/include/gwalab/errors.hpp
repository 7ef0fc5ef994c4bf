#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gwalab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnboundParameter : public Error {
 public:
  explicit UnboundParameter(const std::string& name)
      : Error("unbound parameter '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroPhi : public Error {
 public:
  ZeroPhi() : Error("phi = 0 is not a regular element") {}
};

class NotACocycle : public Error {
 public:
  NotACocycle() : Error("input 4-cochain is not a cocycle") {}
};

class NotACommonZero : public Error {
 public:
  NotACommonZero() : Error("lambda is not a common zero of phi, phi_1, phi_2") {}
};

class RelationFails : public Error {
 public:
  explicit RelationFails(std::size_t index)
      : Error("relation " + std::to_string(index) + " does not reduce to 0"), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class UnknownEntry : public Error {
 public:
  explicit UnknownEntry(const std::string& name) : Error("unknown catalog entry '" + name + "'") {}
};

/// The requested operation does not apply to this input (CLI exit code 3).
class Inapplicable : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  EmptyInput() : Error("generator list is empty or all zero") {}
};

}  // namespace gwalab
