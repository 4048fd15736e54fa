#include "fibcube/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "fibcube/error.hpp"
#include "fibcube/fibstrings.hpp"
#include "fibcube/seq_value.hpp"

namespace fibcube {

namespace {

using Mask = std::uint64_t;

// Position p (1-indexed) of an n-bit word lives in bit n - p, so numeric
// order of masks equals lexicographic order of words.
class VertexIndex {
 public:
  explicit VertexIndex(int n) : n_(n) {
    for (const auto& w : enumerate_vertices(n)) masks_.push_back(to_mask(w.str()));
  }

  std::size_t size() const noexcept { return masks_.size(); }
  Mask mask(std::size_t v) const { return masks_[v]; }
  Mask bit(int position) const { return Mask{1} << (n_ - position); }

  Mask to_mask(const std::string& word) const {
    Mask m = 0;
    for (char c : word) m = (m << 1) | static_cast<Mask>(c == '1');
    return m;
  }

  std::string to_word(Mask m) const {
    std::string out(static_cast<std::size_t>(n_), '0');
    for (int p = 1; p <= n_; ++p) {
      if (m & bit(p)) out[p - 1] = '1';
    }
    return out;
  }

  // Index of a Fibonacci mask, or size() when `m` is not a vertex.
  std::size_t find(Mask m) const {
    const auto it = std::ranges::lower_bound(masks_, m);
    return it != masks_.end() && *it == m ? static_cast<std::size_t>(it - masks_.begin())
                                          : masks_.size();
  }

 private:
  int n_;
  std::vector<Mask> masks_;
};

class BipartiteMatcher {
 public:
  explicit BipartiteMatcher(const VertexIndex& index, int n)
      : index_(index), n_(n), mate_(index.size(), kNone), seen_(index.size(), 0) {}

  std::vector<std::pair<std::size_t, std::size_t>> run() {
    for (std::size_t u = 0; u < index_.size(); ++u) {
      if (!is_left(u)) continue;
      ++stamp_;
      augment(u);
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < index_.size(); ++u) {
      if (is_left(u) && mate_[u] != kNone) edges.emplace_back(u, mate_[u]);
    }
    return edges;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // Bipartition by parity of the word weight.
  bool is_left(std::size_t v) const {
    return std::popcount(index_.mask(v)) % 2 == 0;
  }

  bool augment(std::size_t u) {
    for (int p = 1; p <= n_; ++p) {
      const Mask m = index_.mask(u) ^ index_.bit(p);
      if (m & (m >> 1)) continue;
      const std::size_t v = index_.find(m);
      if (seen_[v] == stamp_) continue;
      seen_[v] = stamp_;
      if (mate_[v] == kNone || augment(mate_[v])) {
        mate_[v] = u;
        mate_[u] = v;
        return true;
      }
    }
    return false;
  }

  const VertexIndex& index_;
  int n_;
  std::vector<std::size_t> mate_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
};

// Upper bound on the number of disjoint cubes that fit into a vertex set,
// given as vertex weights y (depending only on word weight) such that every
// candidate cube has total weight >= 1. The bound is floor(sum y / scale).
struct WeightDual {
  std::vector<std::uint64_t> per_class;  // y * scale, indexed by word weight
  std::uint64_t scale = 1;
};

// Exact simplex for  max sum(z)  s.t.  M z <= b, z >= 0  with b >= 0.
// Returns the optimal shadow prices of the rows, i.e. an optimal solution of
// the dual  min b.f  s.t.  M^T f >= 1, f >= 0.
std::vector<Rational> shadow_prices(const std::vector<std::vector<Rational>>& m,
                                    const std::vector<Rational>& b) {
  const std::size_t rows = m.size();
  const std::size_t vars = rows == 0 ? 0 : m[0].size();
  const std::size_t cols = vars + rows + 1;  // structural, slack, rhs
  std::vector<std::vector<Rational>> t(rows + 1, std::vector<Rational>(cols));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < vars; ++j) t[i][j] = m[i][j];
    t[i][vars + i] = 1;
    t[i][cols - 1] = b[i];
    basis[i] = vars + i;
  }
  for (std::size_t j = 0; j < vars; ++j) t[rows][j] = -1;

  for (;;) {
    // Bland's rule on both choices rules out cycling.
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (t[rows][j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rational ratio = t[i][cols - 1] / t[i][enter];
      if (leave == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == rows) return {};  // unbounded; cannot happen for covering rows
    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational factor = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }
  std::vector<Rational> prices(rows);
  for (std::size_t i = 0; i < rows; ++i) prices[i] = t[rows][vars + i];
  return prices;
}

std::uint64_t choose(int n, int r) {
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return out;
}

// Best weight-class dual for the given cube profiles. A cube whose base has
// weight w spans C(k, j) vertices of weight w + j. Returns an empty dual when
// the solver result fails the exact feasibility check.
WeightDual solve_weight_dual(int k, const std::vector<std::size_t>& class_sizes,
                             const std::vector<std::size_t>& base_weights) {
  const std::size_t classes = class_sizes.size();
  std::vector<std::vector<Rational>> m(classes,
                                       std::vector<Rational>(base_weights.size()));
  for (std::size_t r = 0; r < base_weights.size(); ++r) {
    for (int j = 0; j <= k; ++j) {
      m[base_weights[r] + static_cast<std::size_t>(j)][r] = choose(k, j);
    }
  }
  std::vector<Rational> b(classes);
  for (std::size_t c = 0; c < classes; ++c) b[c] = class_sizes[c];
  const auto f = shadow_prices(m, b);
  if (f.size() != classes) return {};

  for (std::size_t r = 0; r < base_weights.size(); ++r) {
    Rational covered = 0;
    for (std::size_t c = 0; c < classes; ++c) covered += m[c][r] * f[c];
    if (covered < 1) return {};
  }
  SeqValue scale = 1;
  for (const auto& y : f) {
    if (y < 0) return {};
    scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(y));
  }
  if (scale > (SeqValue(1) << 20)) return {};
  WeightDual dual;
  dual.scale = scale.convert_to<std::uint64_t>();
  for (const auto& y : f) {
    const SeqValue scaled = boost::multiprecision::numerator(y * Rational(scale));
    dual.per_class.push_back(scaled.convert_to<std::uint64_t>());
  }
  return dual;
}

// Exact maximum set packing over the candidate cubes by depth-first
// branch-and-bound. Each node takes the free, coverable vertex lying in the
// fewest usable cubes, then either covers it with one of those cubes or
// discards it. "Coverable" means some cube through the vertex is still
// entirely free; the bound at a node is the least of
//   coverable / 2^k,
//   min(coverable even, coverable odd) / 2^{k-1}   (cubes are balanced),
//   the weight-class dual evaluated on the coverable vertices.
class SetPacker {
 public:
  SetPacker(std::vector<std::size_t> weight,
            std::vector<std::vector<std::size_t>> cubes, int k,
            std::uint64_t budget)
      : weight_(std::move(weight)),
        cubes_(std::move(cubes)),
        cube_size_(std::size_t{1} << k),
        budget_(budget),
        containing_(weight_.size()),
        blocked_(weight_.size(), 0),
        usable_(weight_.size(), 0),
        cube_blockers_(cubes_.size(), 0) {
    std::size_t classes = 0;
    for (std::size_t w : weight_) classes = std::max(classes, w + 1);
    coverable_.assign(classes, 0);
    for (std::size_t c = 0; c < cubes_.size(); ++c) {
      for (std::size_t v : cubes_[c]) containing_[v].push_back(c);
    }
    std::vector<std::size_t> base_weights;
    for (const auto& cube : cubes_) base_weights.push_back(weight_[cube.front()]);
    std::ranges::sort(base_weights);
    base_weights.erase(std::ranges::unique(base_weights).begin(), base_weights.end());
    for (std::size_t v = 0; v < weight_.size(); ++v) {
      usable_[v] = containing_[v].size();
      if (usable_[v] > 0) ++coverable_[weight_[v]];
    }
    if (!cubes_.empty()) dual_ = solve_weight_dual(k, coverable_, base_weights);
  }

  void run() { search(); }

  bool exceeded() const noexcept { return exceeded_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  const std::vector<std::size_t>& best() const noexcept { return best_; }

 private:
  void block(std::size_t v) {
    if (usable_[v] > 0) --coverable_[weight_[v]];
    blocked_[v] = 1;
    for (std::size_t c : containing_[v]) {
      if (cube_blockers_[c]++ != 0) continue;
      for (std::size_t w : cubes_[c]) {
        if (--usable_[w] == 0 && !blocked_[w]) --coverable_[weight_[w]];
      }
    }
  }

  void unblock(std::size_t v) {
    for (std::size_t c : containing_[v]) {
      if (--cube_blockers_[c] != 0) continue;
      for (std::size_t w : cubes_[c]) {
        if (usable_[w]++ == 0 && !blocked_[w]) ++coverable_[weight_[w]];
      }
    }
    blocked_[v] = 0;
    if (usable_[v] > 0) ++coverable_[weight_[v]];
  }

  std::size_t room() const noexcept {
    std::size_t parity[2] = {0, 0};
    std::uint64_t weighted = 0;
    for (std::size_t w = 0; w < coverable_.size(); ++w) {
      parity[w & 1] += coverable_[w];
      if (!dual_.per_class.empty()) weighted += coverable_[w] * dual_.per_class[w];
    }
    std::size_t bound = std::min((parity[0] + parity[1]) / cube_size_,
                                 std::min(parity[0], parity[1]) / (cube_size_ / 2));
    if (!dual_.per_class.empty()) {
      bound = std::min<std::size_t>(bound, weighted / dual_.scale);
    }
    return bound;
  }

  // Free vertex with the fewest usable cubes; ties go to the lowest index.
  std::size_t pick_vertex() const {
    std::size_t pick = blocked_.size();
    for (std::size_t v = 0; v < blocked_.size(); ++v) {
      if (blocked_[v] || usable_[v] == 0) continue;
      if (pick == blocked_.size() || usable_[v] < usable_[pick]) pick = v;
      if (usable_[pick] == 1) break;
    }
    return pick;
  }

  void search() {
    if (exceeded_) return;
    if (++nodes_ > budget_) {
      exceeded_ = true;
      return;
    }
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (chosen_.size() + room() <= best_.size()) return;

    const std::size_t v = pick_vertex();  // exists: room() > 0 here
    for (std::size_t c : containing_[v]) {
      if (cube_blockers_[c] != 0) continue;
      chosen_.push_back(c);
      for (std::size_t w : cubes_[c]) block(w);
      search();
      for (auto it = cubes_[c].rbegin(); it != cubes_[c].rend(); ++it) unblock(*it);
      chosen_.pop_back();
      if (exceeded_) return;
    }
    block(v);
    search();
    unblock(v);
  }

  std::vector<std::size_t> weight_;  // word weight of each vertex
  std::vector<std::vector<std::size_t>> cubes_;
  std::size_t cube_size_;
  std::uint64_t budget_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<std::uint8_t> blocked_;
  std::vector<std::size_t> usable_;        // usable cubes through each vertex
  std::vector<std::size_t> cube_blockers_; // blocked vertices in each cube
  std::vector<std::size_t> coverable_;     // per weight class: unblocked, usable_ > 0
  WeightDual dual_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

}  // namespace

OracleResult oracle_max_packing(int n, int k, OracleOptions options) {
  if (k < 0) throw Error(Errc::kInvalidK, "oracle: k must be >= 0");
  if (n < 0 || n > kMaxOracleOrder) {
    throw Error(Errc::kOutOfRange, "oracle: n must lie in [0, " +
                                       std::to_string(kMaxOracleOrder) + "]");
  }
  OracleResult result;
  result.witness.n = n;
  result.witness.k = k;

  if (k == 0) {
    for (const auto& w : enumerate_vertices(n)) {
      result.witness.cubes.push_back(make_subcube(n, w.str(), {}));
    }
    result.count = result.witness.cubes.size();
    return result;
  }

  const VertexIndex index(n);
  if (k == 1) {
    for (const auto& [u, v] : BipartiteMatcher(index, n).run()) {
      const Mask low = std::min(index.mask(u), index.mask(v));
      const Mask diff = index.mask(u) ^ index.mask(v);
      const int position = n - std::countr_zero(diff);
      result.witness.cubes.push_back(make_subcube(n, index.to_word(low), {position}));
    }
    std::ranges::sort(result.witness.cubes);
    result.count = result.witness.cubes.size();
    return result;
  }

  const auto candidates = enumerate_subcubes(n, k);
  std::vector<std::vector<std::size_t>> cube_vertices;
  cube_vertices.reserve(candidates.size());
  for (const auto& cube : candidates) {
    const Mask base = index.to_mask(cube.base().str());
    std::vector<std::size_t> members;
    for (Mask subset = 0; subset < (Mask{1} << k); ++subset) {
      Mask m = base;
      for (int j = 0; j < k; ++j) {
        if ((subset >> j) & 1) m |= index.bit(cube.dirs()[j]);
      }
      members.push_back(index.find(m));
    }
    std::ranges::sort(members);
    cube_vertices.push_back(std::move(members));
  }

  std::vector<std::size_t> weight(index.size());
  for (std::size_t v = 0; v < index.size(); ++v) {
    weight[v] = static_cast<std::size_t>(std::popcount(index.mask(v)));
  }
  SetPacker packer(std::move(weight), std::move(cube_vertices), k,
                   options.node_budget);
  packer.run();
  for (std::size_t c : packer.best()) result.witness.cubes.push_back(candidates[c]);
  std::ranges::sort(result.witness.cubes);
  result.count = result.witness.cubes.size();
  result.nodes = packer.nodes();
  result.status = packer.exceeded() ? OracleStatus::kBudgetExceeded : OracleStatus::kExact;
  return result;
}

}  // namespace fibcube
