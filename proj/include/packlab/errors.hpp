#ifndef PACKLAB_ERRORS_HPP
#define PACKLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace packlab {

enum class Err : int {
  Ok = 0,
  // complex construction / queries
  NotATriangulation,
  NotSimplyConnected,
  EmptyBoundary,
  UnknownVertex,
  EdgeNotIncident,
  AlphaNotInterior,
  ParameterOutOfRange,
  // layout
  NonConvergence,
  InconsistentRadii,
  // packing geometry
  NotNeighbors,
  NotAFace,
  NotBoundaryDisk,
  DoesNotFill,
  NotContained,
  CrosscutInvalid,
  PointOnBoundary,
  // combinatoric crosscuts
  DuplicateEdge,
  NonAdjacentConsecutive,
  ThreeInOneFace,
  EndpointNotBoundary,
  NotMultiple,
  // rigidity pipeline
  NotSimpleInterior,
  NotApplicable,
  NotASlit,
  SlitsIntersect,
  EdgeSetsOverlap,
  NotAdmissible,
  NotFilling,
  CandidateNotContained,
  LowerNeighborEscapes,
  AlphaMismatch,
  AlphaInLowerDomain,
  NoLoner,
  EqualityViolated,
  NotAccessible,
  HypothesisViolated,
  // i/o
  IoError,
  FormatError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, std::string message)
      : std::runtime_error(std::string(err_name(code)) + ": " + message), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& message) { throw Error(code, message); }

inline void require(bool cond, Err code, const std::string& message) {
  if (!cond) fail(code, message);
}

}  // namespace packlab

#endif
