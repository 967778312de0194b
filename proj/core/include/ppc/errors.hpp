#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ppc {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The request exceeds a configured ceiling (sieve range, memory budget, oracle scale).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A caller-supplied resource does not satisfy the operation's precondition,
// e.g. a base prime table that does not reach sqrt(hi).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// A zero table is empty or fails its counting sanity gate.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// A query reaches beyond the ordinates a zero table covers.
class CoverageError : public Error {
 public:
  using Error::Error;
};

}  // namespace ppc
