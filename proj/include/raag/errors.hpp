#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace raag {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidLetter : public Error {
 public:
  InvalidLetter(std::size_t index, long long value)
      : Error("invalid letter " + std::to_string(value) + " at position " +
              std::to_string(index)),
        index_(index),
        value_(value) {}

  std::size_t index() const noexcept { return index_; }
  long long value() const noexcept { return value_; }

 private:
  std::size_t index_;
  long long value_;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class MalformedPiling : public Error {
 public:
  using Error::Error;
};

class EmptyPiling : public Error {
 public:
  EmptyPiling() : Error("operation requires a nonempty piling") {}
};

class NotNonSplit : public Error {
 public:
  using Error::Error;
};

class WitnessVerificationFailed : public Error {
 public:
  using Error::Error;
};

class NotFreeGroup : public Error {
 public:
  NotFreeGroup() : Error("group has commuting generators; not a free group") {}
};

class NotAbelianGroup : public Error {
 public:
  NotAbelianGroup()
      : Error("group is missing commuting pairs; not free abelian") {}
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class EmptyGroup : public Error {
 public:
  EmptyGroup() : Error("cannot render a piling with zero columns") {}
};

}  // namespace raag
