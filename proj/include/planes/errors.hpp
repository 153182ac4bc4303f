#pragma once

#include <stdexcept>
#include <string>

namespace planes {

struct PlanesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndependenceError : PlanesError {
  IndependenceError() : PlanesError("basis forms are linearly dependent") {}
};

struct NotMemberError : PlanesError {
  NotMemberError() : PlanesError("plane is not a member of the variety") {}
};

struct ZeroTripleError : PlanesError {
  ZeroTripleError() : PlanesError("(a,b,c) must not all be zero") {}
};

struct RankDeficientOmegaError : PlanesError {
  RankDeficientOmegaError() : PlanesError("Omega has dual rank < 6") {}
};

struct QRankDeficientError : PlanesError {
  QRankDeficientError() : PlanesError("Omega has q-rank < 3") {}
};

struct TransversalityError : PlanesError {
  TransversalityError()
      : PlanesError("(omega ^ L) meets (L ^ L) nontrivially") {}
};

struct RetriesExhaustedError : PlanesError {
  RetriesExhaustedError() : PlanesError("sampler retries exhausted") {}
};

struct DegenerateParametersError : PlanesError {
  DegenerateParametersError()
      : PlanesError("tritangent parameters are degenerate") {}
};

struct VeroneseDegenerateError : PlanesError {
  VeroneseDegenerateError()
      : PlanesError("(u0,u1) lies on the Veronese surface") {}
};

struct NotConstantRank4Error : PlanesError {
  NotConstantRank4Error()
      : PlanesError("plane contains an element of rank != 4") {}
};

struct ZeroCubicError : PlanesError {
  ZeroCubicError() : PlanesError("cubic form is identically zero") {}
};

struct NotSingularError : PlanesError {
  NotSingularError() : PlanesError("cubic is not singular at the point") {}
};

struct NotAFactorError : PlanesError {
  NotAFactorError() : PlanesError("linear form does not divide the cubic") {}
};

struct NotDeterminantalError : PlanesError {
  NotDeterminantalError()
      : PlanesError("plane is not contained in V+ tensor V-") {}
};

struct PreconditionError : PlanesError {
  using PlanesError::PlanesError;
};

}  // namespace planes
