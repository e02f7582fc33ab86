#pragma once

#include <stdexcept>
#include <string>

namespace fvslab {

enum class Errc {
  DanglingHalfArc,
  DuplicateHalfArc,
  EulerViolation,
  UnknownVertex,
  UnknownArc,
  NoOuterFace,
  NotCrossing,
  PinchedCrossing,
  NotStrictSubset,
  NotNormal,
  NotLaminar,
  NotConsecutive,
  EmptySet,
  CycleBudgetExceeded,
  TooLarge,
  ResourceLimit,
  HypothesisViolated,
  EssentialVertexOnD,
  NotFeedbackSet,
  NonFacialRing,
  LoopTooTight,
  NonPositiveH,
  NotGCoating,
  BudgetExhausted,
  SearchFailed,
  ParseError,
  Internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DanglingHalfArc: return "DanglingHalfArc";
    case Errc::DuplicateHalfArc: return "DuplicateHalfArc";
    case Errc::EulerViolation: return "EulerViolation";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::UnknownArc: return "UnknownArc";
    case Errc::NoOuterFace: return "NoOuterFace";
    case Errc::NotCrossing: return "NotCrossing";
    case Errc::PinchedCrossing: return "PinchedCrossing";
    case Errc::NotStrictSubset: return "NotStrictSubset";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotLaminar: return "NotLaminar";
    case Errc::NotConsecutive: return "NotConsecutive";
    case Errc::EmptySet: return "EmptySet";
    case Errc::CycleBudgetExceeded: return "CycleBudgetExceeded";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::EssentialVertexOnD: return "EssentialVertexOnD";
    case Errc::NotFeedbackSet: return "NotFeedbackSet";
    case Errc::NonFacialRing: return "NonFacialRing";
    case Errc::LoopTooTight: return "LoopTooTight";
    case Errc::NonPositiveH: return "NonPositiveH";
    case Errc::NotGCoating: return "NotGCoating";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::SearchFailed: return "SearchFailed";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace fvslab
