#pragma once

#include <stdexcept>
#include <string>

namespace ordo {

enum class ErrorCode {
  InvalidArgument,
  NoParts,
  OracleLimit,
  SearchLimit,
  EnumerationLimit,
  ArityMismatch,
  BadLength,
  BadAlphabet,
  WrapMismatch,
  RepeatedWindow,
  NotATournament,
  Parse,
};

const char* to_string(ErrorCode code);

/// Every recoverable failure in the library is reported with this type; the
/// code distinguishes the cases callers are expected to branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ordo
