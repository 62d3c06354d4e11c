#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace exreg {

enum class ErrorCode {
  AntisymmetryViolation,
  NotAnOrder,
  NotMonotone,
  DomainMismatch,
  ShapeMismatch,
  NotWeakening,
  NotAMap,
  NotExactFork,
  NotCongruence,
  BimoduleLawFailed,
  AdjunctionFailed,
  NotQMorphism,
  ConeNotIncluded,
  NotCongruenceOver,
  UnknownSuite,
  NotFailing,
  ParseError,
};

inline std::string_view error_name(ErrorCode c) noexcept {
  switch (c) {
    case ErrorCode::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorCode::NotAnOrder: return "NotAnOrder";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotWeakening: return "NotWeakening";
    case ErrorCode::NotAMap: return "NotAMap";
    case ErrorCode::NotExactFork: return "NotExactFork";
    case ErrorCode::NotCongruence: return "NotCongruence";
    case ErrorCode::BimoduleLawFailed: return "BimoduleLawFailed";
    case ErrorCode::AdjunctionFailed: return "AdjunctionFailed";
    case ErrorCode::NotQMorphism: return "NotQMorphism";
    case ErrorCode::ConeNotIncluded: return "ConeNotIncluded";
    case ErrorCode::NotCongruenceOver: return "NotCongruenceOver";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::NotFailing: return "NotFailing";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace exreg
