#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace fermat {

enum class ErrorCode {
  DimensionMismatch,
  AnchorCoincidence,
  EmptyInput,
  NonPositiveWeight,
  NonFiniteValue,
  UnsupportedNorm,
  IndexOutOfRange,
  InstanceTooLarge,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

// Single exception type for the library; callers switch on code().
class FermatError : public std::runtime_error {
 public:
  FermatError(ErrorCode code, const std::string& message,
              std::optional<std::size_t> anchor = std::nullopt)
      : std::runtime_error(message), code_(code), anchor_(anchor) {}

  ErrorCode code() const noexcept { return code_; }

  // Index of the offending anchor for AnchorCoincidence.
  std::optional<std::size_t> anchor() const noexcept { return anchor_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> anchor_;
};

}  // namespace fermat
