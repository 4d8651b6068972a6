#pragma once

#include <stdexcept>
#include <string>

namespace tantrix {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IllegalSize : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A tileset parsed cleanly but contradicts one of the known tile facts.
class FactViolation : public Error {
 public:
  FactViolation(std::string fact, const std::string& what)
      : Error(fact + ": " + what), fact_(std::move(fact)) {}
  const std::string& fact() const noexcept { return fact_; }

 private:
  std::string fact_;
};

class BoardTooSmall : public Error {
 public:
  using Error::Error;
};

class DuplicateConstraintFamily : public Error {
 public:
  using Error::Error;
};

class MultipleTilesOnPlace : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace tantrix
