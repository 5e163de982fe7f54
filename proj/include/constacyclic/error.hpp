#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace constacyclic {

enum class Errc {
  NotPrime,
  CapExceeded,
  ContextMismatch,
  ZeroInverse,
  DivisionByZeroPoly,
  DegreeZero,
  BothZero,
  WidthTooSmall,
  OutOfRange,
  ReducibleFactor,
  EvenCharacteristic,
  MessageTooLong,
  LengthMismatch,
  WrongArity,
  ZeroCode,
  SearchSpaceTooLarge,
  HypothesisViolated,
  ParseError,
};

constexpr std::string_view errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::BothZero: return "BothZero";
    case Errc::WidthTooSmall: return "WidthTooSmall";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::ReducibleFactor: return "ReducibleFactor";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::MessageTooLong: return "MessageTooLong";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::WrongArity: return "WrongArity";
    case Errc::ZeroCode: return "ZeroCode";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure in the library is reported as an Error carrying an Errc.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace constacyclic
