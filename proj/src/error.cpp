#include "widar/error.hpp"

namespace widar {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kEmptyDocument: return "EmptyDocument";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kNoReferences: return "NoReferences";
    case ErrorKind::kAllTied: return "AllTied";
    case ErrorKind::kMissingJudgment: return "MissingJudgment";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kDuplicateId: return "DuplicateId";
    case ErrorKind::kMissingField: return "MissingField";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kMixedConfig: return "MixedConfig";
  }
  return "Unknown";
}

}  // namespace widar
