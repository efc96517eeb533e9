#include "packlab/errors.hpp"

namespace packlab {

const char* err_name(Err e) {
  switch (e) {
    case Err::Ok: return "Ok";
    case Err::NotATriangulation: return "NotATriangulation";
    case Err::NotSimplyConnected: return "NotSimplyConnected";
    case Err::EmptyBoundary: return "EmptyBoundary";
    case Err::UnknownVertex: return "UnknownVertex";
    case Err::EdgeNotIncident: return "EdgeNotIncident";
    case Err::AlphaNotInterior: return "AlphaNotInterior";
    case Err::ParameterOutOfRange: return "ParameterOutOfRange";
    case Err::NonConvergence: return "NonConvergence";
    case Err::InconsistentRadii: return "InconsistentRadii";
    case Err::NotNeighbors: return "NotNeighbors";
    case Err::NotAFace: return "NotAFace";
    case Err::NotBoundaryDisk: return "NotBoundaryDisk";
    case Err::DoesNotFill: return "DoesNotFill";
    case Err::NotContained: return "NotContained";
    case Err::CrosscutInvalid: return "CrosscutInvalid";
    case Err::PointOnBoundary: return "PointOnBoundary";
    case Err::DuplicateEdge: return "DuplicateEdge";
    case Err::NonAdjacentConsecutive: return "NonAdjacentConsecutive";
    case Err::ThreeInOneFace: return "ThreeInOneFace";
    case Err::EndpointNotBoundary: return "EndpointNotBoundary";
    case Err::NotMultiple: return "NotMultiple";
    case Err::NotSimpleInterior: return "NotSimpleInterior";
    case Err::NotApplicable: return "NotApplicable";
    case Err::NotASlit: return "NotASlit";
    case Err::SlitsIntersect: return "SlitsIntersect";
    case Err::EdgeSetsOverlap: return "EdgeSetsOverlap";
    case Err::NotAdmissible: return "NotAdmissible";
    case Err::NotFilling: return "NotFilling";
    case Err::CandidateNotContained: return "CandidateNotContained";
    case Err::LowerNeighborEscapes: return "LowerNeighborEscapes";
    case Err::AlphaMismatch: return "AlphaMismatch";
    case Err::AlphaInLowerDomain: return "AlphaInLowerDomain";
    case Err::NoLoner: return "NoLoner";
    case Err::EqualityViolated: return "EqualityViolated";
    case Err::NotAccessible: return "NotAccessible";
    case Err::HypothesisViolated: return "HypothesisViolated";
    case Err::IoError: return "IoError";
    case Err::FormatError: return "FormatError";
  }
  return "Unknown";
}

}  // namespace packlab
