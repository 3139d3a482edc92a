#pragma once

#include <stdexcept>
#include <string>

namespace fqd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (polynomials, field elements, JSON documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold (zero divisor, mismatched
/// fields, non-primitive base, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of one of the class number theorems is violated. The
/// hypothesis is named so callers can report it verbatim.
class HypothesisError : public DomainError {
 public:
  HypothesisError(std::string hypothesis, const std::string& detail)
      : DomainError(detail.empty() ? "requires " + hypothesis
                                   : "requires " + hypothesis + " (" + detail + ")"),
        hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// Input exceeds the desk-scale bounds the tables are sized for.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Two computation routes disagreed, or an exact step failed to be exact.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fqd
