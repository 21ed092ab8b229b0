#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace genusgaps {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Inputs that cannot come from actual geometry (parity, non-integral values).
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A formula was evaluated outside the range where it is certified.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A certificate could not be produced or an audit found a hole.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Overlap chain broken at index `n`.
class OverlapError : public CertificationError {
 public:
  OverlapError(const std::string& what, mpz_class n)
      : CertificationError(what), n_(std::move(n)) {}
  const mpz_class& offending_n() const noexcept { return n_; }

 private:
  mpz_class n_;
};

/// Genus without any realization witness.
class CoverageError : public CertificationError {
 public:
  CoverageError(const std::string& what, mpz_class genus)
      : CertificationError(what), genus_(std::move(genus)) {}
  const mpz_class& uncovered_genus() const noexcept { return genus_; }

 private:
  mpz_class genus_;
};

/// Malformed text input; carries the 1-based line number (0 when not line-bound).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace genusgaps
