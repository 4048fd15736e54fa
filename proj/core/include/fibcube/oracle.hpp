#pragma once

#include <cstddef>
#include <cstdint>

#include "fibcube/subcubes.hpp"

namespace fibcube {

/// Exhaustive-search reference for q_k(n). Built only on vertex and
/// subcube enumeration; it never consults the counting formulas or the
/// recursive construction.

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;
inline constexpr int kMaxOracleOrder = 30;

struct OracleOptions {
  /// Branch-and-bound node limit (k >= 2 only; matching is polynomial).
  std::uint64_t node_budget = kDefaultOracleBudget;
};

enum class OracleStatus {
  kExact,
  kBudgetExceeded,  // count is a lower bound
};

struct OracleResult {
  std::size_t count = 0;
  Packing witness;
  OracleStatus status = OracleStatus::kExact;
  std::uint64_t nodes = 0;

  bool exact() const noexcept { return status == OracleStatus::kExact; }
};

/// k == 0 returns every vertex; k == 1 runs augmenting-path bipartite
/// matching; k >= 2 runs branch-and-bound set packing over all induced Q_k.
/// Throws Error{kOutOfRange} for n outside [0, kMaxOracleOrder] and
/// Error{kInvalidK} for k < 0.
OracleResult oracle_max_packing(int n, int k, OracleOptions options = {});

}  // namespace fibcube
