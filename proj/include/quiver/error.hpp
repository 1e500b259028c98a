#pragma once

#include <stdexcept>
#include <string>

namespace quiv {

enum class Errc {
  InvalidArrow,
  EmptyQuiver,
  SizeMismatch,
  LoopedVertex,
  NegativeEntry,
  ZeroVector,
  BoundTooLarge,
  NotTame,
  RadicalRankUnexpected,
  SearchExhausted,
  HypothesisViolated,
  NotSchurRoot,
  NotARoot,
  UnsupportedR,
  ShapeMismatch,
  FieldNotPrime,
  EndAlgebraTooLarge,
  SpaceTooLarge,
  Overflow,
  Parse,
};

inline const char *errc_name(Errc c) {
  switch (c) {
  case Errc::InvalidArrow: return "InvalidArrow";
  case Errc::EmptyQuiver: return "EmptyQuiver";
  case Errc::SizeMismatch: return "SizeMismatch";
  case Errc::LoopedVertex: return "LoopedVertex";
  case Errc::NegativeEntry: return "NegativeEntry";
  case Errc::ZeroVector: return "ZeroVector";
  case Errc::BoundTooLarge: return "BoundTooLarge";
  case Errc::NotTame: return "NotTame";
  case Errc::RadicalRankUnexpected: return "RadicalRankUnexpected";
  case Errc::SearchExhausted: return "SearchExhausted";
  case Errc::HypothesisViolated: return "HypothesisViolated";
  case Errc::NotSchurRoot: return "NotSchurRoot";
  case Errc::NotARoot: return "NotARoot";
  case Errc::UnsupportedR: return "UnsupportedR";
  case Errc::ShapeMismatch: return "ShapeMismatch";
  case Errc::FieldNotPrime: return "FieldNotPrime";
  case Errc::EndAlgebraTooLarge: return "EndAlgebraTooLarge";
  case Errc::SpaceTooLarge: return "SpaceTooLarge";
  case Errc::Overflow: return "Overflow";
  case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

// Errors raised when a configured search or enumeration limit is hit.
inline bool is_cap_error(Errc c) {
  return c == Errc::BoundTooLarge || c == Errc::SearchExhausted ||
         c == Errc::EndAlgebraTooLarge || c == Errc::SpaceTooLarge;
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

} // namespace quiv
