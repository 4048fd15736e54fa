#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fibcube/error.hpp"
#include "fibcube/subcubes.hpp"

namespace fibcube {

/// A cube exactly as it appears in a certificate, before validation.
struct RawCube {
  std::string base;
  std::vector<int> dirs;

  friend bool operator==(const RawCube&, const RawCube&) = default;
};

/// Wire form of a packing:
///   {"n": int, "k": int, "count": int,
///    "cubes": [{"base": "<01-string>", "dirs": [ints]}, ...]}
struct Certificate {
  int n = 0;
  int k = 0;
  std::size_t count = 0;
  std::vector<RawCube> cubes;
};

/// Raised for certificates that are not structurally well formed. Lists the
/// indices of offending cubes (empty when the problem is at top level).
class CertificateError : public Error {
 public:
  CertificateError(const std::string& what, std::vector<std::size_t> cubes)
      : Error(Errc::kMalformedCertificate, what), cubes_(std::move(cubes)) {}

  const std::vector<std::size_t>& offending_cubes() const noexcept {
    return cubes_;
  }

 private:
  std::vector<std::size_t> cubes_;
};

Certificate to_certificate(const Packing& packing);

/// Single-line JSON with keys in the order n, k, count, cubes.
std::string to_json(const Certificate& certificate);
inline std::string to_json(const Packing& packing) {
  return to_json(to_certificate(packing));
}

/// Throws CertificateError on malformed JSON, missing or mistyped fields.
/// Semantic problems (non-Fibonacci bases, overlaps) are left to
/// verify_packing.
Certificate parse_certificate(std::string_view json_text);

}  // namespace fibcube
