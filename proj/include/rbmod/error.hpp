#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rbmod {

enum class ErrorKind {
  NonSquare,
  DimensionMismatch,
  Singular,
  IrrationalSpectrum,
  TruncationExceeded,
  ConstantTermNotAllowed,
  FlavorMismatch,
  NotQuasiIdempotent,
  NotAModule,
  InvalidCaseParams,
  UnsupportedDimension,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Base of every error raised by the library. `kind()` is what the CLI maps
/// onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

template <ErrorKind K>
class ErrorOf : public Error {
 public:
  explicit ErrorOf(const std::string& message) : Error(K, message) {}
};

using NonSquare = ErrorOf<ErrorKind::NonSquare>;
using DimensionMismatch = ErrorOf<ErrorKind::DimensionMismatch>;
using Singular = ErrorOf<ErrorKind::Singular>;
using IrrationalSpectrum = ErrorOf<ErrorKind::IrrationalSpectrum>;
using TruncationExceeded = ErrorOf<ErrorKind::TruncationExceeded>;
using ConstantTermNotAllowed = ErrorOf<ErrorKind::ConstantTermNotAllowed>;
using FlavorMismatch = ErrorOf<ErrorKind::FlavorMismatch>;
using NotQuasiIdempotent = ErrorOf<ErrorKind::NotQuasiIdempotent>;
using NotAModule = ErrorOf<ErrorKind::NotAModule>;
using InvalidCaseParams = ErrorOf<ErrorKind::InvalidCaseParams>;
using UnsupportedDimension = ErrorOf<ErrorKind::UnsupportedDimension>;
using InvalidArgument = ErrorOf<ErrorKind::InvalidArgument>;
using ParseError = ErrorOf<ErrorKind::ParseError>;

}  // namespace rbmod
