#include "fibcube/power_series.hpp"

#include <algorithm>

#include "fibcube/error.hpp"

namespace fibcube {

PowerSeries::PowerSeries(std::size_t degree) : coeffs_(degree + 1) {}

PowerSeries::PowerSeries(std::size_t degree,
                         std::initializer_list<long> coefficients)
    : coeffs_(degree + 1) {
  std::size_t i = 0;
  for (long c : coefficients) {
    if (i > degree) break;
    coeffs_[i++] = c;
  }
}

PowerSeries PowerSeries::monomial(std::size_t degree, std::size_t power) {
  PowerSeries out(degree);
  if (power <= degree) out.coeffs_[power] = 1;
  return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t degree = std::min(a.degree(), b.degree());
  PowerSeries out(degree);
  for (std::size_t i = 0; i <= degree; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= degree; ++j) {
      if (!b.coeffs_[j].is_zero()) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

PowerSeries PowerSeries::pow(unsigned exponent) const {
  PowerSeries result = monomial(degree(), 0);
  PowerSeries base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

PowerSeries PowerSeries::inverse() const {
  const SeqValue& lead = coeffs_[0];
  if (lead != 1 && lead != -1) {
    throw Error(Errc::kOutOfRange,
                "PowerSeries::inverse: constant term must be a unit");
  }
  // a * b = 1  =>  b_m = -lead * sum_{j=1..m} a_j b_{m-j}
  PowerSeries out(degree());
  out.coeffs_[0] = lead;
  for (std::size_t m = 1; m <= degree(); ++m) {
    SeqValue acc = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      if (!coeffs_[j].is_zero()) acc += coeffs_[j] * out.coeffs_[m - j];
    }
    out.coeffs_[m] = -lead * acc;
  }
  return out;
}

}  // namespace fibcube
