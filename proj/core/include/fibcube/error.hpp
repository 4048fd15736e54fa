#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fibcube {

enum class Errc {
  kMalformedWord,       // a symbol other than '0' / '1'
  kNotFibWord,          // two consecutive 1s
  kBaseNotZeroOnDirs,
  kPositionOutOfRange,
  kDuplicatePosition,
  kLengthMismatch,
  kDimensionMismatch,
  kInvalidK,
  kOutOfRange,
  kMalformedCertificate,
};

std::string_view to_string(Errc code);

/// Base exception for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fibcube
