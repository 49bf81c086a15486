// Copyright 2026 The inball Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace inball {

// Every failure the library can signal. The CLI maps categories to exit
// codes: input/validation problems -> 1, verification problems -> 2.
enum class ErrorCode {
  // polygon validation
  TooFewVertices,
  DuplicateVertex,
  SelfIntersecting,
  NonFinite,
  // polyhedron validation
  InvalidFacet,
  NonManifoldEdge,
  NotClosed,
  EulerMismatch,
  NonPlanarFacet,
  NonConvexFacet,
  // shared geometry
  NonPositiveScale,
  NotConvex,
  // inscribed-ball solver
  Infeasible,
  Unbounded,
  NumericalFailure,
  MismatchedShape,
  // derivative verification
  LineThroughOrigin,
  NotTangential,
  StepTooLarge,
  SampleOutOfRange,
  // erosion
  EpsilonTooLarge,
  // generators
  BadN,
  NonPositiveRadius,
  UnknownKind,
  BadRange,
  // io / cli
  ParseError,
  IoError,
  InvalidArgument,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooFewVertices:    return "TooFewVertices";
    case ErrorCode::DuplicateVertex:   return "DuplicateVertex";
    case ErrorCode::SelfIntersecting:  return "SelfIntersecting";
    case ErrorCode::NonFinite:         return "NonFinite";
    case ErrorCode::InvalidFacet:      return "InvalidFacet";
    case ErrorCode::NonManifoldEdge:   return "NonManifoldEdge";
    case ErrorCode::NotClosed:         return "NotClosed";
    case ErrorCode::EulerMismatch:     return "EulerMismatch";
    case ErrorCode::NonPlanarFacet:    return "NonPlanarFacet";
    case ErrorCode::NonConvexFacet:    return "NonConvexFacet";
    case ErrorCode::NonPositiveScale:  return "NonPositiveScale";
    case ErrorCode::NotConvex:         return "NotConvex";
    case ErrorCode::Infeasible:        return "Infeasible";
    case ErrorCode::Unbounded:         return "Unbounded";
    case ErrorCode::NumericalFailure:  return "NumericalFailure";
    case ErrorCode::MismatchedShape:   return "MismatchedShape";
    case ErrorCode::LineThroughOrigin: return "LineThroughOrigin";
    case ErrorCode::NotTangential:     return "NotTangential";
    case ErrorCode::StepTooLarge:      return "StepTooLarge";
    case ErrorCode::SampleOutOfRange:  return "SampleOutOfRange";
    case ErrorCode::EpsilonTooLarge:   return "EpsilonTooLarge";
    case ErrorCode::BadN:              return "BadN";
    case ErrorCode::NonPositiveRadius: return "NonPositiveRadius";
    case ErrorCode::UnknownKind:       return "UnknownKind";
    case ErrorCode::BadRange:          return "BadRange";
    case ErrorCode::ParseError:        return "ParseError";
    case ErrorCode::IoError:           return "IoError";
    case ErrorCode::InvalidArgument:   return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

// True for error categories caused by bad input (files, flags, degenerate
// shapes) rather than by a failed verification of a well-formed shape.
inline bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::Infeasible:
    case ErrorCode::Unbounded:
    case ErrorCode::NumericalFailure:
    case ErrorCode::MismatchedShape:
    case ErrorCode::NotTangential:
      return false;
    default:
      return true;
  }
}

}  // namespace inball
