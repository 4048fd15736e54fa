#include "fibcube/formulas.hpp"

#include <string>
#include <vector>

#include "fibcube/error.hpp"
#include "fibcube/fibstrings.hpp"

namespace fibcube {

namespace {

void require_range(int k, int n, const char* where) {
  if (k < 0) {
    throw Error(Errc::kInvalidK, std::string(where) + ": k must be >= 0");
  }
  if (n < 0) {
    throw Error(Errc::kOutOfRange, std::string(where) + ": n must be >= 0");
  }
}

// F_0 .. F_last.
std::vector<SeqValue> fib_table(int last) {
  std::vector<SeqValue> f(static_cast<std::size_t>(std::max(last, 1)) + 1);
  f[0] = 0;
  f[1] = 1;
  for (std::size_t i = 2; i < f.size(); ++i) f[i] = f[i - 1] + f[i - 2];
  return f;
}

// q_{k'}(n') for 1 <= k' <= k, 0 <= n' <= n via q_k(n) = q_{k-1}(n-2) + q_k(n-3).
SeqValue by_recurrence(int k, int n) {
  const auto cols = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<SeqValue>> memo(static_cast<std::size_t>(k) + 1,
                                          std::vector<SeqValue>(cols));
  for (std::size_t m = 0; m < cols; ++m) memo[1][m] = q1(static_cast<int>(m));
  for (std::size_t j = 2; j <= static_cast<std::size_t>(k); ++j) {
    for (std::size_t m = 3; m < cols; ++m) {
      memo[j][m] = memo[j - 1][m - 2] + memo[j][m - 3];
    }
  }
  return memo[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
}

// q_k(n) = q_k(n-1) + q_k(n-2) + delta_k(n) with q_k(0) = 0 and
// q_k(1) = [k == 1].
SeqValue by_fib_recurrence(int k, int n) {
  SeqValue prev2 = 0;
  SeqValue prev1 = k == 1 ? 1 : 0;
  if (n == 0) return prev2;
  for (int m = 2; m <= n; ++m) {
    SeqValue next = prev1 + prev2 + delta(k, m);
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

SeqValue by_closed_formula(int k, int n) {
  const int top = n + k - 2;
  if (top < 0) return 0;
  const auto f = fib_table(n + k);
  SeqValue sum = 0;
  for (int i = k - 1; i <= top / 3; ++i) {
    sum += binomial(i, k - 1) * f[static_cast<std::size_t>(n + k - 3 * i - 1)];
  }
  return sum;
}

SeqValue by_convolution(int k, int n) {
  const auto f = fib_table(n + 1);
  SeqValue sum = 0;
  for (int m = 0; m <= n; ++m) {
    sum += delta(k, m) * f[static_cast<std::size_t>(n - m + 1)];
  }
  return sum;
}

SeqValue by_generating_function(int k, int n) {
  const auto degree = static_cast<std::size_t>(n);
  PowerSeries one_minus_cube(degree, {1});
  if (degree >= 3) one_minus_cube[3] = -1;
  const PowerSeries fib_denominator(degree, {1, -1, -1});
  const PowerSeries denominator =
      one_minus_cube.pow(static_cast<unsigned>(k)) * fib_denominator;
  const PowerSeries numerator =
      PowerSeries::monomial(degree, static_cast<std::size_t>(2 * k - 1));
  return (numerator * denominator.inverse())[degree];
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kRecurrence: return "recurrence";
    case Method::kFibRecurrence: return "fib-recurrence";
    case Method::kClosed: return "closed";
    case Method::kConvolution: return "convolution";
    case Method::kGenfun: return "genfun";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

SeqValue binomial(long a, long b) {
  if (b < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  SeqValue result = 1;
  for (long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;  // exact: result is C(a-b+i, i) here
  }
  return result;
}

SeqValue delta(int k, int n) {
  if (k < 1) throw Error(Errc::kInvalidK, "delta: k must be >= 1");
  if (n < 0) throw Error(Errc::kOutOfRange, "delta: n must be >= 0");
  if ((n + k) % 3 != 2) return 0;
  return binomial((n + k - 2) / 3, k - 1);
}

SeqValue q1(int n) {
  if (n < 0) throw Error(Errc::kOutOfRange, "q1: n must be >= 0");
  return fib(n + 2) / 2;
}

SeqValue q_eval(int k, int n, Method method) {
  require_range(k, n, "q_eval");
  if (k == 0) return fib(n + 2);
  switch (method) {
    case Method::kRecurrence: return by_recurrence(k, n);
    case Method::kFibRecurrence: return by_fib_recurrence(k, n);
    case Method::kClosed: return by_closed_formula(k, n);
    case Method::kConvolution: return by_convolution(k, n);
    case Method::kGenfun: return by_generating_function(k, n);
  }
  throw Error(Errc::kOutOfRange, "q_eval: unknown method");
}

SeqValue lower_bound(int k, int n) {
  if (k < 1) throw Error(Errc::kInvalidK, "lower_bound: k must be >= 1");
  if (n < 2 * k - 2) {
    throw Error(Errc::kOutOfRange, "lower_bound: requires n >= 2k - 2 (n=" +
                                       std::to_string(n) + ", k=" +
                                       std::to_string(k) + ")");
  }
  return fib(n - 2 * k + 2);
}

Rational density_ratio(int k, int n) {
  require_range(k, n, "density_ratio");
  return Rational(q_eval(k, n), fib(n + 2));
}

std::string to_decimal(const Rational& value, int digits) {
  if (digits < 0) digits = 0;
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  SeqValue num = numerator(value);
  const SeqValue den = denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;
  SeqValue scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half up on the magnitude
  SeqValue scaled = (num * scale * 2 + den) / (den * 2);
  const SeqValue whole = scaled / scale;
  std::string frac = SeqValue(scaled % scale).str();
  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.str();
  if (digits > 0) {
    out += '.';
    out += std::string(static_cast<std::size_t>(digits) - frac.size(), '0');
    out += frac;
  }
  return out;
}

PowerSeries delta_series(int k, std::size_t degree) {
  PowerSeries out(degree);
  for (std::size_t n = 0; n <= degree; ++n) out[n] = delta(k, static_cast<int>(n));
  return out;
}

PowerSeries inverse_cube_power_series(int k, std::size_t degree) {
  if (k < 1) throw Error(Errc::kInvalidK, "inverse_cube_power_series: k >= 1");
  PowerSeries out(degree);
  for (long i = k - 1;; ++i) {
    const auto power = static_cast<std::size_t>(3 * (i - k + 1));
    if (power > degree) break;
    out[power] = binomial(i, k - 1);
  }
  return out;
}

}  // namespace fibcube
