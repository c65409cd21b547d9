#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cansub {

enum class ErrorKind {
  kIllegalOperation,
  kInvalidInput,
  kInvalidDescriptor,
  kOracleBranchMismatch,
  kInsufficientLevel,
  kDegenerateImage,
  kOutOfRange,
  kMalformedConfig,
  kIo,
};

/// Stable kebab-case name, e.g. "invalid-descriptor". Used verbatim in CLI output.
std::string_view to_string(ErrorKind kind) noexcept;

/// The single exception type thrown by the library; the kind identifies the failed contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cansub
