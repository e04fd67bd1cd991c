#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace stablecore {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public ParseError {
 public:
  EmptyInput() : ParseError("empty generator set") {}
};

/// Binary operation on objects living in different ambient dimensions or degrees.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A degree-two monomial set that is not closed under the Borel exchange
/// m -> m*X_i/X_j (i < j, X_j | m). When known, `witness` is m and
/// (from, to) = (j, i).
class NotStronglyStable : public Error {
 public:
  NotStronglyStable(std::string what, std::optional<std::string> witness = {},
                    int from = 0, int to = 0)
      : Error(std::move(what)), witness(std::move(witness)), from(from), to(to) {}

  std::optional<std::string> witness;
  int from;
  int to;
};

/// The core formula requires the G_d property.
class GdFailure : public Error {
 public:
  using Error::Error;
};

/// A certificate that must exist by theory could not be produced.
class CertificationFailure : public Error {
 public:
  CertificationFailure(std::string check, const std::string& detail)
      : Error(check + ": " + detail), check(std::move(check)) {}

  std::string check;
};

}  // namespace stablecore
