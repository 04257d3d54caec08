#pragma once

#include <stdexcept>
#include <string>

namespace pargroup {

enum class Errc {
  NotLatinSquare,
  NoIdentity,
  NoInverse,
  NotAssociative,
  ClosureTooLarge,
  BadAction,
  LatticeTooLarge,
  SubsetMissingIdentity,
  DirectBoundExceeded,
  GroupMismatch,
  DimensionBoundExceeded,
  NonIntegralMultiplicity,
  PreconditionViolated,
  AmbiguousDegrees,
  NotAPartialRep,
  InvalidInput,
  BoundExceeded,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

enum class PreconditionReason { NotDivisor, OrderTwiceK, PrimeCondition };

class PreconditionError : public Error {
 public:
  PreconditionError(PreconditionReason reason, const std::string& what)
      : Error(Errc::PreconditionViolated, what), reason_(reason) {}
  PreconditionReason reason() const { return reason_; }

 private:
  PreconditionReason reason_;
};

}  // namespace pargroup
