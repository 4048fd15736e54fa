#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "fibcube/power_series.hpp"
#include "fibcube/seq_value.hpp"

namespace fibcube {

/// Independent routes to q_k(n), the maximum number of vertex-disjoint
/// induced Q_k in the Fibonacci cube of order n.
enum class Method {
  kRecurrence,     // q_k(n) = q_{k-1}(n-2) + q_k(n-3)
  kFibRecurrence,  // q_k(n) = q_k(n-1) + q_k(n-2) + delta_k(n)
  kClosed,         // sum_i C(i, k-1) F_{n+k-3i-1}
  kConvolution,    // sum_m delta_k(m) F_{n-m+1}
  kGenfun,         // [x^n] x^{2k-1} / ((1-x^3)^k (1-x-x^2))
};

inline constexpr std::array<Method, 5> kAllMethods = {
    Method::kRecurrence, Method::kFibRecurrence, Method::kClosed,
    Method::kConvolution, Method::kGenfun};

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view name);

/// C(a, b); zero when b < 0 or a < b.
SeqValue binomial(long a, long b);

/// C((n+k-2)/3, k-1) when (n+k) mod 3 == 2, else 0. Requires k >= 1, n >= 0.
SeqValue delta(int k, int n);

/// floor(F_{n+2} / 2): the maximum matching size.
SeqValue q1(int n);

/// q_k(n) by the selected route. k == 0 returns the vertex count F_{n+2}.
/// Throws Error{kInvalidK} for k < 0 and Error{kOutOfRange} for n < 0.
SeqValue q_eval(int k, int n, Method method = Method::kFibRecurrence);

/// F_{n-2k+2}. Throws Error{kOutOfRange} when n < 2k - 2.
SeqValue lower_bound(int k, int n);

/// Exact q_k(n) / F_{n+2}.
Rational density_ratio(int k, int n);

/// Decimal rendering rounded half-up to `digits` fractional digits.
std::string to_decimal(const Rational& value, int digits);

/// Sum_{n <= degree} delta_k(n) x^n.
PowerSeries delta_series(int k, std::size_t degree);

/// Sum_i C(i, k-1) x^{3(i-k+1)}, the expansion of 1/(1-x^3)^k.
PowerSeries inverse_cube_power_series(int k, std::size_t degree);

}  // namespace fibcube
