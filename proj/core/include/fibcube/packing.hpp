#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fibcube/certificate.hpp"
#include "fibcube/seq_value.hpp"
#include "fibcube/subcubes.hpp"

namespace fibcube {

/// Builds q_k(n) pairwise disjoint induced Q_k by the recursive
/// decomposition of the cube into 00/10 halves plus a 010-prefixed rest.
/// Requires k >= 1, n >= 0; throws Error{kInvalidK} / Error{kOutOfRange}.
Packing build_packing(int k, int n);

enum class Verdict {
  kOptimal,
  kSuboptimal,
  kExceedsKnownMaximum,  // contradicts the counting formulas; fatal
  kInvalid,              // failed validity, disjointness, dimension or count
};

std::string_view to_string(Verdict verdict);

struct CubeIssue {
  std::size_t index;
  std::string message;
};

struct VerificationReport {
  int n = 0;
  int k = 0;
  std::size_t count = 0;           // number of cubes listed
  bool count_field_matches = true; // "count" equals the number of cubes
  std::vector<CubeIssue> invalid_cubes;
  std::vector<std::size_t> wrong_dimension;
  std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs;
  SeqValue covered;        // count * 2^k
  SeqValue order;          // F_{n+2}
  SeqValue known_maximum;  // q_k(n)
  Verdict verdict = Verdict::kInvalid;

  bool structurally_valid() const noexcept {
    return count_field_matches && invalid_cubes.empty() &&
           wrong_dimension.empty() && overlapping_pairs.empty();
  }
  bool accepted() const noexcept {
    return verdict == Verdict::kOptimal || verdict == Verdict::kSuboptimal;
  }
};

VerificationReport verify_packing(const Certificate& certificate);
VerificationReport verify_packing(const Packing& packing);

}  // namespace fibcube
