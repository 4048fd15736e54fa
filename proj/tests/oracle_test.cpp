#include "fibcube/oracle.hpp"

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "fibcube/certificate.hpp"
#include "fibcube/error.hpp"
#include "fibcube/fibstrings.hpp"
#include "fibcube/packing.hpp"

namespace fibcube {
namespace {

TEST(Oracle, Examples) {
  EXPECT_EQ(oracle_max_packing(3, 2).count, 1u);
  EXPECT_EQ(oracle_max_packing(4, 1).count, 4u);
  EXPECT_EQ(oracle_max_packing(6, 2).count, 5u);
}

TEST(Oracle, MatchesUnprunedExhaustiveSearch) {
  const std::pair<int, int> limits[] = {{1, 6}, {2, 7}, {3, 9}, {4, 10}};
  for (const auto& [k, max_n] : limits) {
    for (int n = 0; n <= max_n; ++n) {
      const auto result = oracle_max_packing(n, k);
      ASSERT_TRUE(result.exact());
      EXPECT_EQ(result.count, testing::naive_max_packing(n, k)) << "k=" << k << " n=" << n;
    }
  }
}

// Values past the reach of the unpruned search, cross-checked with an
// external integer-programming solver.
TEST(Oracle, FrozenMaxima) {
  struct Case {
    int k, n;
    std::size_t count;
  };
  for (const Case& c : {Case{2, 7, 8}, Case{2, 8, 13}, Case{2, 9, 22}, Case{2, 10, 35},
                        Case{3, 9, 10}, Case{3, 10, 16}, Case{4, 10, 7}, Case{4, 11, 12}}) {
    const auto result = oracle_max_packing(c.n, c.k);
    EXPECT_TRUE(result.exact());
    EXPECT_EQ(result.count, c.count) << "k=" << c.k << " n=" << c.n;
  }
}

TEST(Oracle, MatchingSaturatesAllButParity) {
  for (int n = 0; n <= 18; ++n) {
    const auto result = oracle_max_packing(n, 1);
    EXPECT_EQ(SeqValue(result.count), fib(n + 2) / 2) << n;
  }
}

TEST(Oracle, WitnessesAreValidPackings) {
  const std::pair<int, int> limits[] = {{1, 14}, {2, 10}, {3, 10}, {4, 11}};
  for (const auto& [k, max_n] : limits) {
    for (int n = 0; n <= max_n; ++n) {
      const auto result = oracle_max_packing(n, k);
      EXPECT_EQ(result.witness.n, n);
      EXPECT_EQ(result.witness.k, k);
      EXPECT_EQ(result.witness.cubes.size(), result.count);
      const auto report = verify_packing(result.witness);
      EXPECT_TRUE(report.structurally_valid()) << "k=" << k << " n=" << n;
    }
  }
}

TEST(Oracle, ZeroDimensionTakesEveryVertex) {
  const auto result = oracle_max_packing(6, 0);
  EXPECT_EQ(result.count, 21u);
  EXPECT_TRUE(verify_packing(result.witness).structurally_valid());
}

TEST(Oracle, BudgetExhaustionIsReported) {
  const auto result = oracle_max_packing(9, 2, OracleOptions{10});
  EXPECT_FALSE(result.exact());
  EXPECT_EQ(result.status, OracleStatus::kBudgetExceeded);
  EXPECT_LE(result.count, 22u);
  EXPECT_EQ(result.witness.cubes.size(), result.count);
  EXPECT_TRUE(verify_packing(result.witness).structurally_valid());
}

TEST(Oracle, Deterministic) {
  const auto a = oracle_max_packing(10, 3);
  const auto b = oracle_max_packing(10, 3);
  EXPECT_EQ(a.nodes, b.nodes);
  EXPECT_EQ(to_json(a.witness), to_json(b.witness));
}

TEST(Oracle, ArgumentErrors) {
  EXPECT_THROW(oracle_max_packing(-1, 2), Error);
  EXPECT_THROW(oracle_max_packing(kMaxOracleOrder + 1, 2), Error);
  try {
    oracle_max_packing(4, -1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kInvalidK);
  }
}

}  // namespace
}  // namespace fibcube
