#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace largeness {

enum class ErrorCode {
  Parse,
  UnknownGenerator,
  DuplicateGenerator,
  EmptyRelator,
  EmptyWord,
  MissingImage,
  DimensionMismatch,
  InvalidZMap,
  NonzeroTSum,
  WrongDeficiency,
  InfiniteAbelianisation,
  BadSampleSpec,
  Io,
};

/// Stable identifier used in reports and CLI diagnostics, e.g. "E_PARSE".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace largeness
