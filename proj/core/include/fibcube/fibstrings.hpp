#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fibcube/seq_value.hpp"

namespace fibcube {

/// A vertex of the Fibonacci cube: a binary word with no two adjacent 1s.
///
/// Positions are 1-indexed from the left, so the word "x1 x2 ... xn" has
/// bit(1) == x1. The empty word is the single vertex of the order-0 cube.
class FibWord {
 public:
  FibWord() = default;

  /// Throws Error{kMalformedWord} or Error{kNotFibWord}.
  static FibWord parse(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  /// 1-indexed; position must lie in [1, size()].
  bool bit(std::size_t position) const { return bits_[position - 1] == '1'; }

  std::size_t weight() const noexcept;

  const std::string& str() const noexcept { return bits_; }

  friend auto operator<=>(const FibWord&, const FibWord&) = default;
  friend bool operator==(const FibWord&, const FibWord&) = default;

 private:
  explicit FibWord(std::string bits) : bits_(std::move(bits)) {}

  std::string bits_;
};

/// F_n with F_0 = 0, F_1 = 1. Throws Error{kOutOfRange} for n < 0.
SeqValue fib(int n);

/// True iff `word` consists of '0'/'1' symbols and has no "11" substring.
bool is_fib_word(std::string_view word) noexcept;

/// All Fibonacci words of length n in lexicographic order ('0' < '1').
/// The result has fib(n + 2) entries.
std::vector<FibWord> enumerate_vertices(int n);

/// Hypercube adjacency: equal length and exactly one differing position.
bool adjacent(const FibWord& a, const FibWord& b) noexcept;

}  // namespace fibcube
