#pragma once

#include <stdexcept>
#include <string>

namespace spherespan {

enum class Err {
  NonFiniteInput,
  OracleInconsistent,
  ZeroVector,
  TooFewVertices,
  DimensionMismatch,
  NonExposedDirection,
  DegenerateSection,
  MidpointOutside,
  MidpointZero,
  ContinuumSuspected,
  ZeroMidpoint,
  NotStrictlyConvex,
  NoStripChord,
  MultipleStripChords,
  EpsSearchFailed,
  ParamSearchFailed,
  VanishingValue,
  SearchFailed,
  SamplingTooCoarse,
  ZeroImage,
  NonRegularValue,
  BadTriangulation,
  VerticesNotFixed,
  NoChordsFound,
  SectionUndefinedEverywhere,
  InvalidSection,
  NotOnSphere,
  NotOnBoundary,
  NoSupportFunctional,
  MalformedInput,
  IoError,
};

const char* to_string(Err code);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& message) {
  throw Error(code, message);
}

inline const char* to_string(Err code) {
  switch (code) {
    case Err::NonFiniteInput: return "NonFiniteInput";
    case Err::OracleInconsistent: return "OracleInconsistent";
    case Err::ZeroVector: return "ZeroVector";
    case Err::TooFewVertices: return "TooFewVertices";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::NonExposedDirection: return "NonExposedDirection";
    case Err::DegenerateSection: return "DegenerateSection";
    case Err::MidpointOutside: return "MidpointOutside";
    case Err::MidpointZero: return "MidpointZero";
    case Err::ContinuumSuspected: return "ContinuumSuspected";
    case Err::ZeroMidpoint: return "ZeroMidpoint";
    case Err::NotStrictlyConvex: return "NotStrictlyConvex";
    case Err::NoStripChord: return "NoStripChord";
    case Err::MultipleStripChords: return "MultipleStripChords";
    case Err::EpsSearchFailed: return "EpsSearchFailed";
    case Err::ParamSearchFailed: return "ParamSearchFailed";
    case Err::VanishingValue: return "VanishingValue";
    case Err::SearchFailed: return "SearchFailed";
    case Err::SamplingTooCoarse: return "SamplingTooCoarse";
    case Err::ZeroImage: return "ZeroImage";
    case Err::NonRegularValue: return "NonRegularValue";
    case Err::BadTriangulation: return "BadTriangulation";
    case Err::VerticesNotFixed: return "VerticesNotFixed";
    case Err::NoChordsFound: return "NoChordsFound";
    case Err::SectionUndefinedEverywhere: return "SectionUndefinedEverywhere";
    case Err::InvalidSection: return "InvalidSection";
    case Err::NotOnSphere: return "NotOnSphere";
    case Err::NotOnBoundary: return "NotOnBoundary";
    case Err::NoSupportFunctional: return "NoSupportFunctional";
    case Err::MalformedInput: return "MalformedInput";
    case Err::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace spherespan
