#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lichi {

enum class ErrorCode {
  DomainError,
  NotPrimitive,
  NoRealPrimitiveCharacter,
  PoleAtOne,
  PrecisionUnreachable,
  OutOfDomain,
  PrincipalCharacter,
  ComplexCharacterUnsupported,
  CompletenessCheckFailed,
  ParseError,
  ModulusMismatch,
  ConductorOne,
  WDomainError,
  EmptyZeroList,
  NExceedsList,
  InsufficientZeros,
  IoError,
  ConfigError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NoRealPrimitiveCharacter: return "NoRealPrimitiveCharacter";
    case ErrorCode::PoleAtOne: return "PoleAtOne";
    case ErrorCode::PrecisionUnreachable: return "PrecisionUnreachable";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::PrincipalCharacter: return "PrincipalCharacter";
    case ErrorCode::ComplexCharacterUnsupported: return "ComplexCharacterUnsupported";
    case ErrorCode::CompletenessCheckFailed: return "CompletenessCheckFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::ConductorOne: return "ConductorOne";
    case ErrorCode::WDomainError: return "WDomainError";
    case ErrorCode::EmptyZeroList: return "EmptyZeroList";
    case ErrorCode::NExceedsList: return "NExceedsList";
    case ErrorCode::InsufficientZeros: return "InsufficientZeros";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lichi
