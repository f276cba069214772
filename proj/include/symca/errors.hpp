#ifndef SYMCA_ERRORS_HPP
#define SYMCA_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symca {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (empty set, zero margin, bad index...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed file contents; the message carries the offending position.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its guard limit.
class EnumerationTooLarge : public Error {
 public:
  EnumerationTooLarge(std::uint64_t count, std::uint64_t limit)
      : Error("enumeration too large: " + std::to_string(count) +
              " candidates exceed limit " + std::to_string(limit)),
        count_(count),
        limit_(limit) {}

  std::uint64_t count() const { return count_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t count_;
  std::uint64_t limit_;
};

class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace symca

#endif  // SYMCA_ERRORS_HPP
