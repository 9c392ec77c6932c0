#pragma once

#include <stdexcept>
#include <string>

namespace pbk {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (braid words, tree expressions).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A word whose closure is split or otherwise needs decomposition first.
class ReducibleWordError : public PreconditionError {
 public:
  ReducibleWordError(const std::string& what, int generator)
      : PreconditionError(what), generator_(generator) {}
  int generator() const noexcept { return generator_; }

 private:
  int generator_;
};

/// A search exceeded the size limits it is specified for.
class BoundExceededError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure (e.g. an exact division that should not fail).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace pbk
