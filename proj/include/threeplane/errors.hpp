#pragma once

#include <stdexcept>
#include <string>

namespace threeplane {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken rotation systems, dangling crossings and similar shape errors.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// A proof construction found no image for a source object.
class LemmaWitnessFailure : public Error {
 public:
  using Error::Error;
};

class InvalidCertificate : public Error {
 public:
  using Error::Error;
};

class TdrSyntaxError : public Error {
 public:
  TdrSyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class TdrSemanticError : public Error {
 public:
  using Error::Error;
};

class GeometryError : public Error {
 public:
  GeometryError(std::string reason, const std::string& detail)
      : Error(reason + ": " + detail), reason_(std::move(reason)) {}
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

}  // namespace threeplane
