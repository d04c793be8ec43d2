#pragma once

#include <stdexcept>
#include <string>

namespace sylvan {

enum class ErrorCode {
  NonSquare,
  DimensionMismatch,
  NonFinite,
  InvalidSpec,
  ZeroMatrix,
  EigFailure,
  SpectraOverlap,
  DegenerateSpectrum,
  DomainInvalid,
  NodeSingular,
  ResolventSingular,
  NotNormal,
  SingularSystem,
  SizeGuard,
  NonFiniteH,
  ParseError,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace sylvan
