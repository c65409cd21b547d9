#include "cansub/error.hpp"

namespace cansub {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kIllegalOperation: return "illegal-operation";
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kInvalidDescriptor: return "invalid-descriptor";
    case ErrorKind::kOracleBranchMismatch: return "oracle-branch-mismatch";
    case ErrorKind::kInsufficientLevel: return "insufficient-level";
    case ErrorKind::kDegenerateImage: return "degenerate-image";
    case ErrorKind::kOutOfRange: return "out-of-range";
    case ErrorKind::kMalformedConfig: return "malformed-config";
    case ErrorKind::kIo: return "io-error";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace cansub
