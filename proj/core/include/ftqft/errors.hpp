#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ftqft {

// Base class for all domain errors raised by the library.  The CLI maps
// these to exit code 2, except SizeExceeded/GroupTooLarge which map to 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A multiplication table failed the group axioms.  `witness` holds the
// offending triple (a,b,c) for associativity, or the bad row/column pair.
struct NotAGroup : Error {
  std::vector<int> witness;
  NotAGroup(const std::string& msg, std::vector<int> w)
      : Error(msg), witness(std::move(w)) {}
};

struct NotAPermutation : Error {
  using Error::Error;
};

struct GroupTooLarge : Error {
  using Error::Error;
};

struct NotACocycle : Error {
  std::vector<int> witness;
  explicit NotACocycle(const std::string& msg, std::vector<int> w = {})
      : Error(msg), witness(std::move(w)) {}
};

// Raised when a numerically computed character value cannot be identified
// with an exact cyclotomic within tolerance.  Signals a bug, not user error.
struct RecognitionFailure : Error {
  using Error::Error;
};

struct SizeExceeded : Error {
  using Error::Error;
};

struct SingularPairing : Error {
  using Error::Error;
};

struct UnsupportedTwistedGenus : Error {
  using Error::Error;
};

// A Verlinde fusion coefficient came out non-integral or negative.  This is
// defined to be a convention/implementation error and must abort the
// computation; coefficients are never rounded.
struct NonIntegralFusion : Error {
  using Error::Error;
};

struct DimensionOutOfRange : Error {
  using Error::Error;
};

struct ZeroCovector : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace ftqft
