#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "fibcube/seq_value.hpp"

namespace fibcube {

/// Integer formal power series truncated at a fixed degree.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t degree);
  PowerSeries(std::size_t degree, std::initializer_list<long> coefficients);

  static PowerSeries monomial(std::size_t degree, std::size_t power);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }

  const SeqValue& operator[](std::size_t i) const { return coeffs_[i]; }
  SeqValue& operator[](std::size_t i) { return coeffs_[i]; }

  /// Product truncated at the smaller of the two degrees.
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  PowerSeries pow(unsigned exponent) const;

  /// Multiplicative inverse; the constant term must be +1 or -1 so the
  /// result stays integral. Throws Error{kOutOfRange} otherwise.
  PowerSeries inverse() const;

  const std::vector<SeqValue>& coefficients() const noexcept { return coeffs_; }

 private:
  std::vector<SeqValue> coeffs_;
};

}  // namespace fibcube
