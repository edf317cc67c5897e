#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace skewarch {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ring, endomorphism, element or polynomial text / parameters.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Elements (or polynomials) of different rings were combined.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive operation was requested on a ring that cannot be enumerated.
class NonEnumerableError : public Error {
 public:
  using Error::Error;
};

/// Ring axioms failed during construction.
class AxiomError : public Error {
 public:
  using Error::Error;
};

/// A map failed to be a unital ring homomorphism.
class EndoError : public Error {
 public:
  EndoError(const std::string& message, std::vector<std::string> witness = {})
      : Error(message), witness_(std::move(witness)) {}
  /// Canonical text of the offending element(s).
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  std::vector<std::string> witness_;
};

/// Raised for non-invertible input to series inversion.
class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace skewarch
