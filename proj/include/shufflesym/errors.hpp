#pragma once

#include <stdexcept>
#include <string>

namespace shufflesym {

/// Error categories surfaced by the library. The CLI maps each one to a
/// distinct process exit status (see exit_code()).
enum class ErrorCode {
  InvalidParams = 10,
  EnumerationTooLarge = 11,
  CapExceeded = 12,
  InvalidPair = 13,
  SymbolDivergence = 14,
  SizeMismatch = 15,
  DegenerateEvaluation = 16,
  ZeroSymbol = 17,
  DuplicateX = 18,
  TooManyPoints = 19,
  BoundaryParameter = 20,
  NegativeMultiplicity = 21,
  ParseError = 22,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  int exit_code() const noexcept { return static_cast<int>(code_); }

 private:
  ErrorCode code_;
};

const char* error_name(ErrorCode code) noexcept;

#define SHUFFLESYM_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(ErrorCode::Name, what) {} \
  };

SHUFFLESYM_DEFINE_ERROR(InvalidParams)
SHUFFLESYM_DEFINE_ERROR(EnumerationTooLarge)
SHUFFLESYM_DEFINE_ERROR(CapExceeded)
SHUFFLESYM_DEFINE_ERROR(InvalidPair)
SHUFFLESYM_DEFINE_ERROR(SymbolDivergence)
SHUFFLESYM_DEFINE_ERROR(SizeMismatch)
SHUFFLESYM_DEFINE_ERROR(DegenerateEvaluation)
SHUFFLESYM_DEFINE_ERROR(ZeroSymbol)
SHUFFLESYM_DEFINE_ERROR(DuplicateX)
SHUFFLESYM_DEFINE_ERROR(TooManyPoints)
SHUFFLESYM_DEFINE_ERROR(BoundaryParameter)
SHUFFLESYM_DEFINE_ERROR(NegativeMultiplicity)
SHUFFLESYM_DEFINE_ERROR(ParseError)

#undef SHUFFLESYM_DEFINE_ERROR

}  // namespace shufflesym
