#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tamelift {

/// Stable, machine-readable failure categories. The CLI reports these by name.
enum class ErrorCode {
  RingMismatch,
  ArityMismatch,
  IndexOutOfRange,
  SingularMatrix,
  NotSymplectic,
  NotSymplecticLinear,
  BadPrime,
  NotCentral,
  NonDivisible,
  PreconditionX,
  UnremovableDefect,
  NonHamiltonian,
  IsIdentity,
  ZeroForm,
  SamplerExhausted,
  SyntaxError,
  UnknownVariable,
  InvalidInput,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure carrying the byte offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& detail)
      : Error(ErrorCode::SyntaxError,
              detail + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace tamelift
