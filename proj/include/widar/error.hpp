#pragma once

#include <stdexcept>
#include <string>

namespace widar {

enum class ErrorKind {
  kEmptyInput,
  kEmptyDocument,
  kLengthMismatch,
  kNoReferences,
  kAllTied,
  kMissingJudgment,
  kParseError,
  kDuplicateId,
  kMissingField,
  kInvalidArgument,
  kMixedConfig,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace widar
