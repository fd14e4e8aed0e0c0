#ifndef CDGLAB_ERROR_HPP
#define CDGLAB_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cdglab {

enum class ErrorCode {
  kLoop,
  kOutOfRange,
  kMalformed,
  kDisconnected,
  kBudgetExceeded,
  kSameVertex,
  kBadParameter,
  kUnknownId,
  kNotRegular,
  kBadRange,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above. Parse
/// errors additionally carry the byte offset where decoding stopped.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        offset_(offset) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> offset_;
};

}  // namespace cdglab

#endif  // CDGLAB_ERROR_HPP
