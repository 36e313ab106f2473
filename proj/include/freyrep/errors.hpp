#pragma once

#include <stdexcept>
#include <string>

namespace freyrep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A change of variables would leave the integral lattice.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

/// The curve has bad reduction at a prime where good reduction is required.
class BadReductionError : public Error {
 public:
  using Error::Error;
};

/// A criterion cannot decide the question (e.g. additive reduction). Never
/// to be read as "false".
class CriterionInapplicable : public Error {
 public:
  using Error::Error;
};

/// An enumeration request exceeds the configured search budget.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A component computation failed while verifying the named claim.
class ClaimError : public Error {
 public:
  ClaimError(std::string claim, const std::string& what)
      : Error("claim '" + claim + "': " + what), claim_(std::move(claim)) {}

  const std::string& claim() const noexcept { return claim_; }

 private:
  std::string claim_;
};

}  // namespace freyrep
