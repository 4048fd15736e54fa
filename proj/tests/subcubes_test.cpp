#include "fibcube/subcubes.hpp"

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "fibcube/error.hpp"

namespace fibcube {
namespace {

Errc error_of(int n, std::string_view base, std::vector<int> dirs) {
  try {
    make_subcube(n, base, std::move(dirs));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error for base " << base;
  return Errc::kOutOfRange;
}

std::vector<std::string> strings(const std::vector<FibWord>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.str());
  return out;
}

TEST(MakeSubcube, ValidSquareInOrderThree) {
  const Subcube sc = make_subcube(3, "000", {3, 1});
  EXPECT_EQ(sc.k(), 2);
  EXPECT_EQ(sc.n(), 3);
  EXPECT_EQ(sc.dirs(), (std::vector<int>{1, 3}));
  EXPECT_EQ(sc.top().str(), "101");
}

TEST(MakeSubcube, SingleVertex) {
  const Subcube sc = make_subcube(2, "10", {});
  EXPECT_EQ(sc.k(), 0);
  EXPECT_EQ(strings(subcube_vertices(sc)), (std::vector<std::string>{"10"}));
}

TEST(MakeSubcube, Errors) {
  EXPECT_EQ(error_of(3, "000", {1, 2}), Errc::kNotFibWord);
  EXPECT_EQ(error_of(3, "010", {2}), Errc::kBaseNotZeroOnDirs);
  EXPECT_EQ(error_of(3, "000", {4}), Errc::kPositionOutOfRange);
  EXPECT_EQ(error_of(3, "000", {0}), Errc::kPositionOutOfRange);
  EXPECT_EQ(error_of(3, "000", {1, 1}), Errc::kDuplicatePosition);
  EXPECT_EQ(error_of(3, "0000", {1}), Errc::kLengthMismatch);
  EXPECT_EQ(error_of(3, "011", {}), Errc::kNotFibWord);
  EXPECT_EQ(error_of(3, "0a0", {}), Errc::kMalformedWord);
  // base 1 next to a free position
  EXPECT_EQ(error_of(3, "100", {2}), Errc::kNotFibWord);
}

TEST(SubcubeVertices, Examples) {
  EXPECT_EQ(strings(subcube_vertices(make_subcube(3, "000", {1, 3}))),
            (std::vector<std::string>{"000", "001", "100", "101"}));
  EXPECT_EQ(strings(subcube_vertices(make_subcube(1, "0", {1}))),
            (std::vector<std::string>{"0", "1"}));
}

TEST(EnumerateSubcubes, Examples) {
  const auto squares = enumerate_subcubes(3, 2);
  ASSERT_EQ(squares.size(), 1u);
  EXPECT_EQ(squares[0].base().str(), "000");
  EXPECT_EQ(squares[0].dirs(), (std::vector<int>{1, 3}));

  EXPECT_EQ(enumerate_subcubes(2, 1).size(), 2u);
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(SeqValue(enumerate_subcubes(n, 0).size()), fib(n + 2));
  }
}

TEST(EnumerateSubcubes, MatchesNaiveExpansion) {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= 5; ++k) {
      const auto cubes = enumerate_subcubes(n, k);
      const auto naive = testing::naive_subcubes(n, k);
      std::set<std::pair<std::string, std::vector<int>>> expected;
      for (const auto& c : naive) expected.emplace(c.base, c.dirs);
      std::set<std::pair<std::string, std::vector<int>>> got;
      for (const auto& c : cubes) got.emplace(c.base().str(), c.dirs());
      ASSERT_EQ(got.size(), cubes.size()) << "duplicates at n=" << n << " k=" << k;
      EXPECT_EQ(got, expected) << "n=" << n << " k=" << k;
      EXPECT_TRUE(std::ranges::is_sorted(cubes));
    }
  }
}

TEST(EnumerateSubcubes, EmptyWhenTooManyDirections) {
  for (int n = 0; n <= 14; ++n) {
    const int most = (n + 1) / 2;
    EXPECT_FALSE(enumerate_subcubes(n, most).empty() && n > 0) << n;
    EXPECT_TRUE(enumerate_subcubes(n, most + 1).empty()) << n;
  }
}

TEST(EnumerateSubcubes, EveryCubeRevalidates) {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= 4; ++k) {
      for (const auto& c : enumerate_subcubes(n, k)) {
        const Subcube again = make_subcube(n, c.base().str(), c.dirs());
        EXPECT_EQ(again, c);
        for (const auto& v : subcube_vertices(c)) {
          ASSERT_TRUE(is_fib_word(v.str()));
          ASSERT_TRUE(c.contains(v));
        }
      }
    }
  }
}

TEST(SubcubesDisjoint, Examples) {
  const auto a = make_subcube(3, "000", {1, 3});
  EXPECT_TRUE(subcubes_disjoint(a, make_subcube(3, "010", {})));
  EXPECT_FALSE(subcubes_disjoint(a, a));
  EXPECT_FALSE(
      subcubes_disjoint(make_subcube(3, "000", {1}), make_subcube(3, "000", {3})));
}

TEST(SubcubesDisjoint, DimensionMismatch) {
  try {
    subcubes_disjoint(make_subcube(3, "000", {}), make_subcube(2, "00", {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDimensionMismatch);
  }
}

// Structural test agrees with intersecting the expanded vertex sets, for
// every pair of cubes (any two dimensions up to 4) of orders up to 10.
TEST(SubcubesDisjoint, AgreesWithVertexIntersection) {
  for (int n = 1; n <= 10; ++n) {
    std::vector<Subcube> all;
    for (int k = 0; k <= 4; ++k) {
      auto cubes = enumerate_subcubes(n, k);
      all.insert(all.end(), cubes.begin(), cubes.end());
    }
    std::vector<std::vector<FibWord>> expanded;
    for (const auto& c : all) expanded.push_back(subcube_vertices(c));
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i; j < all.size(); ++j) {
        std::vector<FibWord> shared;
        std::ranges::set_intersection(expanded[i], expanded[j],
                                      std::back_inserter(shared));
        ASSERT_EQ(subcubes_disjoint(all[i], all[j]), shared.empty())
            << all[i].base().str() << " vs " << all[j].base().str();
      }
    }
  }
}

}  // namespace
}  // namespace fibcube
