#pragma once

#include <compare>
#include <string_view>
#include <vector>

#include "fibcube/fibstrings.hpp"

namespace fibcube {

/// An induced k-dimensional hypercube inside the Fibonacci cube of order n.
///
/// Stored as a base word holding 0 on every free position plus the sorted
/// list of free positions (1-indexed). The spanned vertices are the words
/// obtained by setting any subset of the free positions to 1; they all lie
/// in the Fibonacci cube iff the top word (every free position set) does.
class Subcube {
 public:
  int n() const noexcept { return static_cast<int>(base_.size()); }
  int k() const noexcept { return static_cast<int>(dirs_.size()); }
  const FibWord& base() const noexcept { return base_; }
  const std::vector<int>& dirs() const noexcept { return dirs_; }

  /// Base word with every free position set to 1.
  FibWord top() const;

  /// True iff `word` is one of the 2^k spanned vertices.
  bool contains(const FibWord& word) const noexcept;

  friend auto operator<=>(const Subcube&, const Subcube&) = default;
  friend bool operator==(const Subcube&, const Subcube&) = default;

 private:
  friend Subcube make_subcube(int n, std::string_view base,
                              std::vector<int> dirs);

  Subcube(FibWord base, std::vector<int> dirs)
      : base_(std::move(base)), dirs_(std::move(dirs)) {}

  FibWord base_;
  std::vector<int> dirs_;
};

/// Validates and builds a subcube. `dirs` may be given in any order; it is
/// stored sorted. Throws Error with one of kPositionOutOfRange,
/// kDuplicatePosition, kLengthMismatch, kMalformedWord, kNotFibWord or
/// kBaseNotZeroOnDirs.
Subcube make_subcube(int n, std::string_view base, std::vector<int> dirs);

/// The 2^k spanned vertices in lexicographic order.
std::vector<FibWord> subcube_vertices(const Subcube& cube);

/// Every induced Q_k of the order-n Fibonacci cube exactly once, ordered by
/// base word and then by dirs.
std::vector<Subcube> enumerate_subcubes(int n, int k);

/// Vertex-set disjointness without expanding either cube: two cubes meet
/// iff their bases agree on every position free in neither.
/// Throws Error{kDimensionMismatch} when a.n() != b.n().
bool subcubes_disjoint(const Subcube& a, const Subcube& b);

/// A family of equal-dimension subcubes of one Fibonacci cube. Pairwise
/// disjointness is what verify_packing() certifies; the struct itself does
/// not enforce it.
struct Packing {
  int n = 0;
  int k = 0;
  std::vector<Subcube> cubes;
};

}  // namespace fibcube
