#include "fibcube/fibstrings.hpp"

#include <algorithm>

#include "fibcube/error.hpp"

namespace fibcube {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kMalformedWord: return "MalformedWord";
    case Errc::kNotFibWord: return "NotFibWord";
    case Errc::kBaseNotZeroOnDirs: return "BaseNotZeroOnDirs";
    case Errc::kPositionOutOfRange: return "PositionOutOfRange";
    case Errc::kDuplicatePosition: return "DuplicatePosition";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kInvalidK: return "InvalidK";
    case Errc::kOutOfRange: return "OutOfRange";
    case Errc::kMalformedCertificate: return "MalformedCertificate";
  }
  return "Unknown";
}

FibWord FibWord::parse(std::string_view text) {
  if (std::ranges::any_of(text, [](char c) { return c != '0' && c != '1'; })) {
    throw Error(Errc::kMalformedWord,
                "word '" + std::string(text) + "' has a symbol other than 0/1");
  }
  if (text.find("11") != std::string_view::npos) {
    throw Error(Errc::kNotFibWord,
                "word '" + std::string(text) + "' has consecutive 1s");
  }
  return FibWord(std::string(text));
}

std::size_t FibWord::weight() const noexcept {
  return static_cast<std::size_t>(std::ranges::count(bits_, '1'));
}

SeqValue fib(int n) {
  if (n < 0) {
    throw Error(Errc::kOutOfRange, "fib: index must be >= 0");
  }
  SeqValue a = 0;
  SeqValue b = 1;
  for (int i = 0; i < n; ++i) {
    a += b;
    std::swap(a, b);
  }
  return a;
}

bool is_fib_word(std::string_view word) noexcept {
  char prev = '0';
  for (char c : word) {
    if (c != '0' && c != '1') return false;
    if (c == '1' && prev == '1') return false;
    prev = c;
  }
  return true;
}

namespace {

void extend(std::string& prefix, std::size_t length,
            std::vector<FibWord>& out) {
  if (prefix.size() == length) {
    out.push_back(FibWord::parse(prefix));
    return;
  }
  prefix.push_back('0');
  extend(prefix, length, out);
  prefix.back() = '1';
  if (prefix.size() < 2 || prefix[prefix.size() - 2] == '0') {
    extend(prefix, length, out);
  }
  prefix.pop_back();
}

}  // namespace

std::vector<FibWord> enumerate_vertices(int n) {
  if (n < 0) {
    throw Error(Errc::kOutOfRange, "enumerate_vertices: n must be >= 0");
  }
  std::vector<FibWord> out;
  std::string prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  extend(prefix, static_cast<std::size_t>(n), out);
  return out;
}

bool adjacent(const FibWord& a, const FibWord& b) noexcept {
  if (a.size() != b.size()) return false;
  std::size_t differing = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    differing += a.str()[i] != b.str()[i];
  }
  return differing == 1;
}

}  // namespace fibcube
