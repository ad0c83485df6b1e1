#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace intervox {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Interval constructed with lo > hi or a non-finite endpoint.
class InvalidInterval : public Error {
 public:
  using Error::Error;
};

// Evaluation left the domain of an elementary function.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Divisor interval contains zero.
class ZeroInDivisor : public DomainError {
 public:
  using DomainError::DomainError;
};
using DivisorContainsZero = ZeroInDivisor;

// A directed pair (a, b) with a > b has no classical interval preimage.
class NotAnInterval : public Error {
 public:
  NotAnInterval(double a, double b);
  double first() const noexcept { return a_; }
  double second() const noexcept { return b_; }

 private:
  double a_;
  double b_;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(std::string name);
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected,
             const std::string& what);
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// Switch requested on a region whose derivative signs are not all certified.
class UncertifiedRegion : public Error {
 public:
  using Error::Error;
};

class MissingInverse : public Error {
 public:
  using Error::Error;
};

}  // namespace intervox
