#include "fibcube/formulas.hpp"

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "fibcube/error.hpp"
#include "fibcube/fibstrings.hpp"

namespace fibcube {
namespace {

// Straight recursion on the recurrence, unmemoized; only for tiny inputs.
SeqValue slow_fib(int n) { return n < 2 ? SeqValue(n) : slow_fib(n - 1) + slow_fib(n - 2); }

// Pascal's rule, independent of the multiplicative binomial.
SeqValue pascal(long a, long b) {
  if (b < 0 || a < b) return 0;
  std::vector<SeqValue> row{1};
  for (long i = 1; i <= a; ++i) {
    std::vector<SeqValue> next(row.size() + 1);
    next.front() = next.back() = 1;
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(b)];
}

TEST(Binomial, MatchesPascalTriangle) {
  for (long a = 0; a <= 30; ++a) {
    for (long b = -1; b <= a + 1; ++b) EXPECT_EQ(binomial(a, b), pascal(a, b)) << a << "," << b;
  }
}

TEST(Delta, Examples) {
  EXPECT_EQ(delta(2, 3), 1);
  EXPECT_EQ(delta(2, 4), 0);
  EXPECT_EQ(delta(2, 6), pascal(2, 1));  // (6+2) mod 3 == 2
  EXPECT_EQ(delta(2, 6), 2);
}

TEST(Delta, LowOrdersNeedNoSpecialCase) {
  EXPECT_EQ(delta(1, 0), 0);
  EXPECT_EQ(delta(1, 1), 1);
  for (int k = 2; k <= 8; ++k) {
    EXPECT_EQ(delta(k, 0), 0) << k;
    EXPECT_EQ(delta(k, 1), 0) << k;
  }
}

TEST(Delta, RejectsBadArguments) {
  EXPECT_THROW(delta(0, 3), Error);
  EXPECT_THROW(delta(1, -1), Error);
}

TEST(Q1, Examples) {
  EXPECT_EQ(q1(5), 6);
  EXPECT_EQ(q1(0), 0);
  EXPECT_EQ(q1(6), slow_fib(8) / 2);
  EXPECT_EQ(q1(6), 10);
}

TEST(QEval, SmallValues) {
  const int q1_row[] = {0, 1, 1, 2, 4, 6};
  const int q2_row[] = {0, 0, 0, 1, 1, 2};
  const int q3_row[] = {0, 0, 0, 0, 0, 1};
  for (Method m : kAllMethods) {
    for (int n = 0; n <= 5; ++n) {
      EXPECT_EQ(q_eval(1, n, m), q1_row[n]) << to_string(m) << " n=" << n;
      EXPECT_EQ(q_eval(2, n, m), q2_row[n]) << to_string(m) << " n=" << n;
      EXPECT_EQ(q_eval(3, n, m), q3_row[n]) << to_string(m) << " n=" << n;
    }
  }
}

TEST(QEval, ExamplesAcrossMethods) {
  for (Method m : kAllMethods) {
    EXPECT_EQ(q_eval(2, 5, m), 2);
    EXPECT_EQ(q_eval(3, 5, m), 1);
    for (int k = 1; k <= 6; ++k) EXPECT_EQ(q_eval(k, 2 * k - 1, m), 1) << k;
    EXPECT_EQ(q_eval(2, 6, m), 5);
  }
  // Order 6 is small enough for unpruned exhaustive search.
  EXPECT_EQ(testing::naive_max_packing(6, 2), 5u);
}

TEST(QEval, AllMethodsAgree) {
  for (int k = 1; k <= 6; ++k) {
    for (int n = 0; n <= 60; ++n) {
      const SeqValue ref = q_eval(k, n, Method::kFibRecurrence);
      for (Method m : kAllMethods) {
        ASSERT_EQ(q_eval(k, n, m), ref) << to_string(m) << " k=" << k << " n=" << n;
      }
    }
  }
}

TEST(QEval, FirstOrderMatchesHalfTheVertexCount) {
  for (int n = 0; n <= 60; ++n) {
    for (Method m : kAllMethods) EXPECT_EQ(q_eval(1, n, m), q1(n));
    EXPECT_EQ(q1(n), fib(n + 2) / 2);
  }
}

TEST(QEval, ZeroDimensionCountsVertices) {
  for (Method m : kAllMethods) EXPECT_EQ(q_eval(0, 7, m), 34);
}

TEST(QEval, ArgumentErrors) {
  try {
    q_eval(-1, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kInvalidK);
  }
  try {
    q_eval(2, -4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kOutOfRange);
  }
}

TEST(QEval, LargeOrderStaysExact) {
  // Every route is exact; compare the two cheapest against each other far
  // past 64-bit range.
  const SeqValue v = q_eval(3, 200, Method::kClosed);
  EXPECT_EQ(v, q_eval(3, 200, Method::kConvolution));
  EXPECT_EQ(v, q_eval(3, 200, Method::kFibRecurrence));
  EXPECT_GT(v, SeqValue(1) << 100);
}

TEST(QEval, PackingCountsFitInsideTheCube) {
  for (int k = 1; k <= 5; ++k) {
    for (int n = 0; n <= 60; ++n) {
      EXPECT_LE(q_eval(k, n) << k, fib(n + 2)) << k << "," << n;
    }
  }
}

TEST(LowerBound, Examples) {
  EXPECT_EQ(lower_bound(2, 2), 0);
  EXPECT_EQ(lower_bound(2, 3), 1);
  EXPECT_EQ(lower_bound(1, 10), slow_fib(10));
  EXPECT_EQ(lower_bound(1, 10), 55);
  try {
    lower_bound(3, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kOutOfRange);
  }
}

TEST(LowerBound, HoldsAndIsTightAtTheStart) {
  for (int k = 1; k <= 5; ++k) {
    for (int n = 2 * k - 2; n <= 60; ++n) EXPECT_GE(q_eval(k, n), lower_bound(k, n));
  }
  for (int k = 1; k <= 6; ++k) {
    EXPECT_EQ(q_eval(k, 2 * k - 2), 0);
    EXPECT_EQ(q_eval(k, 2 * k - 1), 1);
  }
}

TEST(DensityRatio, Examples) {
  EXPECT_EQ(density_ratio(1, 1), Rational(1, 2));
  EXPECT_EQ(density_ratio(2, 3), Rational(1, 5));
  const Rational r = density_ratio(1, 30);
  const Rational gap = r > Rational(1, 2) ? r - Rational(1, 2) : Rational(1, 2) - r;
  EXPECT_LT(gap, Rational(1, 1'000'000));
}

TEST(ToDecimal, RoundsHalfUp) {
  EXPECT_EQ(to_decimal(Rational(1, 2), 3), "0.500");
  EXPECT_EQ(to_decimal(Rational(2, 3), 4), "0.6667");
  EXPECT_EQ(to_decimal(Rational(1, 8), 2), "0.13");
  EXPECT_EQ(to_decimal(Rational(5, 1), 0), "5");
  EXPECT_EQ(to_decimal(Rational(1, 200), 2), "0.01");
  EXPECT_EQ(to_decimal(Rational(-1, 3), 2), "-0.33");
}

TEST(Series, DeltaSeriesIsTheGeneratingFunction) {
  constexpr std::size_t kDegree = 40;
  PowerSeries one_minus_cube(kDegree, {1});
  one_minus_cube[3] = -1;
  for (int k = 1; k <= 5; ++k) {
    const PowerSeries rhs =
        PowerSeries::monomial(kDegree, static_cast<std::size_t>(2 * k - 1)) *
        one_minus_cube.pow(static_cast<unsigned>(k)).inverse();
    EXPECT_EQ(delta_series(k, kDegree), rhs) << "k=" << k;
    EXPECT_EQ(inverse_cube_power_series(k, kDegree),
              one_minus_cube.pow(static_cast<unsigned>(k)).inverse());
  }
}

TEST(Series, HockeyStick) {
  for (long k = 2; k <= 6; ++k) {
    for (long i = 0; i <= 30; ++i) {
      SeqValue sum = 0;
      for (long l = 0; l <= i; ++l) sum += binomial(l, k - 2);
      EXPECT_EQ(sum, binomial(i + 1, k - 1)) << k << "," << i;
    }
  }
}

TEST(Method, NamesRoundTrip) {
  for (Method m : kAllMethods) EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_FALSE(parse_method("all").has_value());
}

}  // namespace
}  // namespace fibcube
