#include "fibcube/subcubes.hpp"

#include <algorithm>
#include <string>

#include "fibcube/error.hpp"

namespace fibcube {

FibWord Subcube::top() const {
  std::string word = base_.str();
  for (int d : dirs_) word[d - 1] = '1';
  return FibWord::parse(word);
}

bool Subcube::contains(const FibWord& word) const noexcept {
  if (word.size() != base_.size()) return false;
  auto d = dirs_.begin();
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (d != dirs_.end() && *d == static_cast<int>(i) + 1) {
      ++d;
      continue;
    }
    if (word.str()[i] != base_.str()[i]) return false;
  }
  return true;
}

Subcube make_subcube(int n, std::string_view base, std::vector<int> dirs) {
  if (n < 0) {
    throw Error(Errc::kOutOfRange, "subcube: n must be >= 0");
  }
  for (int d : dirs) {
    if (d < 1 || d > n) {
      throw Error(Errc::kPositionOutOfRange,
                  "subcube: position " + std::to_string(d) +
                      " outside [1, " + std::to_string(n) + "]");
    }
  }
  std::ranges::sort(dirs);
  if (std::ranges::adjacent_find(dirs) != dirs.end()) {
    throw Error(Errc::kDuplicatePosition, "subcube: repeated free position");
  }
  if (base.size() != static_cast<std::size_t>(n)) {
    throw Error(Errc::kLengthMismatch,
                "subcube: base '" + std::string(base) + "' does not have length " +
                    std::to_string(n));
  }
  FibWord word = FibWord::parse(base);
  for (int d : dirs) {
    if (word.bit(static_cast<std::size_t>(d))) {
      throw Error(Errc::kBaseNotZeroOnDirs,
                  "subcube: base has 1 at free position " + std::to_string(d));
    }
  }
  std::string top(base);
  for (int d : dirs) top[d - 1] = '1';
  if (!is_fib_word(top)) {
    throw Error(Errc::kNotFibWord,
                "subcube: top word '" + top + "' has consecutive 1s");
  }
  return Subcube(std::move(word), std::move(dirs));
}

std::vector<FibWord> subcube_vertices(const Subcube& cube) {
  const auto k = static_cast<std::size_t>(cube.k());
  std::vector<FibWord> out;
  out.reserve(std::size_t{1} << k);
  std::string word = cube.base().str();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    for (std::size_t j = 0; j < k; ++j) {
      word[cube.dirs()[j] - 1] = (mask >> j) & 1 ? '1' : '0';
    }
    out.push_back(FibWord::parse(word));
  }
  std::ranges::sort(out);
  return out;
}

namespace {

// Independent sets of size k in the path 1 - 2 - ... - n, in increasing order.
void choose_dirs(int n, int k, int next, std::vector<int>& chosen,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(chosen.size()) == k) {
    out.push_back(chosen);
    return;
  }
  const int remaining = k - static_cast<int>(chosen.size());
  // Smallest span of `remaining` pairwise non-adjacent positions is 2r - 1.
  for (int p = next; p + 2 * (remaining - 1) <= n; ++p) {
    chosen.push_back(p);
    choose_dirs(n, k, p + 2, chosen, out);
    chosen.pop_back();
  }
}

// Bases that are 0 on every forced position and Fibonacci elsewhere.
void fill_bases(const std::vector<bool>& forced_zero, std::string& prefix,
                std::vector<std::string>& out) {
  const std::size_t i = prefix.size();
  if (i == forced_zero.size()) {
    out.push_back(prefix);
    return;
  }
  prefix.push_back('0');
  fill_bases(forced_zero, prefix, out);
  if (!forced_zero[i] && (i == 0 || prefix[i - 1] == '0')) {
    prefix.back() = '1';
    fill_bases(forced_zero, prefix, out);
  }
  prefix.pop_back();
}

}  // namespace

std::vector<Subcube> enumerate_subcubes(int n, int k) {
  if (n < 0 || k < 0) {
    throw Error(Errc::kOutOfRange, "enumerate_subcubes: n and k must be >= 0");
  }
  std::vector<std::vector<int>> dir_sets;
  std::vector<int> chosen;
  choose_dirs(n, k, 1, chosen, dir_sets);

  std::vector<Subcube> out;
  std::string prefix;
  std::vector<std::string> bases;
  for (const auto& dirs : dir_sets) {
    std::vector<bool> forced_zero(static_cast<std::size_t>(n), false);
    for (int d : dirs) {
      for (int q = d - 1; q <= d + 1; ++q) {
        if (q >= 1 && q <= n) forced_zero[q - 1] = true;
      }
    }
    bases.clear();
    fill_bases(forced_zero, prefix, bases);
    for (const auto& base : bases) out.push_back(make_subcube(n, base, dirs));
  }
  std::ranges::sort(out);
  return out;
}

bool subcubes_disjoint(const Subcube& a, const Subcube& b) {
  if (a.n() != b.n()) {
    throw Error(Errc::kDimensionMismatch,
                "subcubes_disjoint: cubes live in different Fibonacci cubes");
  }
  std::vector<bool> free(static_cast<std::size_t>(a.n()), false);
  for (int d : a.dirs()) free[d - 1] = true;
  for (int d : b.dirs()) free[d - 1] = true;
  const std::string& x = a.base().str();
  const std::string& y = b.base().str();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!free[i] && x[i] != y[i]) return true;
  }
  return false;
}

}  // namespace fibcube
