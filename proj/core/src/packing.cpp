#include "fibcube/packing.hpp"

#include <string>
#include <unordered_map>

#include "fibcube/error.hpp"
#include "fibcube/formulas.hpp"

namespace fibcube {

namespace {

struct Cube {
  std::string base;
  std::vector<int> dirs;
};

std::vector<Cube> with_prefix(std::vector<Cube> cubes, const std::string& prefix) {
  const int shift = static_cast<int>(prefix.size());
  for (auto& c : cubes) {
    c.base.insert(0, prefix);
    for (int& d : c.dirs) d += shift;
  }
  return cubes;
}

// Matching from the complete partition into blocks
// (010)^{i-1} 00 G_{n+1-3i} == (010)^{i-1} 10 G_{n+1-3i}, i = 1..n/3,
// followed by a fixed matching of the residual (010)^{n/3} G_{n mod 3}.
std::vector<Cube> build_matching(int n) {
  std::vector<Cube> out;
  std::string prefix;
  for (int i = 1; i <= n / 3; ++i) {
    const int direction = 3 * (i - 1) + 1;
    for (const auto& x : enumerate_vertices(n + 1 - 3 * i)) {
      out.push_back(Cube{prefix + "00" + x.str(), {direction}});
    }
    prefix += "010";
  }
  switch (n % 3) {
    case 0: break;                                      // lone vertex unmatched
    case 1: out.push_back(Cube{prefix + "0", {n}}); break;  // edge {0, 1}
    case 2: out.push_back(Cube{prefix + "00", {n}}); break; // edge {00, 01}
  }
  return out;
}

std::vector<Cube> build(int k, int n) {
  if (k == 1) return build_matching(n);
  if (n < 3) return {};
  // Pair each (k-1)-cube of 00G_{n-2} with its copy in 10G_{n-2}.
  std::vector<Cube> out = build(k - 1, n - 2);
  for (auto& c : out) {
    c.base.insert(0, "00");
    for (int& d : c.dirs) d += 2;
    c.dirs.insert(c.dirs.begin(), 1);
  }
  for (auto& c : with_prefix(build(k, n - 3), "010")) out.push_back(std::move(c));
  return out;
}

}  // namespace

Packing build_packing(int k, int n) {
  if (k < 1) throw Error(Errc::kInvalidK, "build_packing: k must be >= 1");
  if (n < 0) throw Error(Errc::kOutOfRange, "build_packing: n must be >= 0");
  Packing packing{n, k, {}};
  auto cubes = build(k, n);
  packing.cubes.reserve(cubes.size());
  for (auto& c : cubes) {
    packing.cubes.push_back(make_subcube(n, c.base, std::move(c.dirs)));
  }
  return packing;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kOptimal: return "optimal";
    case Verdict::kSuboptimal: return "suboptimal";
    case Verdict::kExceedsKnownMaximum: return "exceeds-known-maximum";
    case Verdict::kInvalid: return "invalid";
  }
  return "unknown";
}

namespace {

// Above this many spanned vertices overlaps are found pairwise instead of
// through a vertex index.
constexpr std::size_t kExpansionLimit = std::size_t{1} << 24;

void find_overlaps(const std::vector<std::pair<std::size_t, Subcube>>& cubes,
                   VerificationReport& report) {
  std::size_t expanded = 0;
  for (const auto& [index, cube] : cubes) {
    expanded += std::size_t{1} << std::min(cube.k(), 62);
    if (expanded > kExpansionLimit) break;
  }
  if (expanded > kExpansionLimit) {
    for (std::size_t a = 0; a < cubes.size(); ++a) {
      for (std::size_t b = a + 1; b < cubes.size(); ++b) {
        if (!subcubes_disjoint(cubes[a].second, cubes[b].second)) {
          report.overlapping_pairs.emplace_back(cubes[a].first, cubes[b].first);
        }
      }
    }
    return;
  }
  // Every shared vertex yields a candidate pair; confirm it structurally.
  std::unordered_map<std::string, std::size_t> owner;
  owner.reserve(expanded);
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t a = 0; a < cubes.size(); ++a) {
    for (const auto& v : subcube_vertices(cubes[a].second)) {
      auto [it, inserted] = owner.emplace(v.str(), a);
      if (!inserted) candidates.emplace_back(it->second, a);
    }
  }
  std::ranges::sort(candidates);
  const auto [first, last] = std::ranges::unique(candidates);
  candidates.erase(first, last);
  for (const auto& [a, b] : candidates) {
    if (!subcubes_disjoint(cubes[a].second, cubes[b].second)) {
      report.overlapping_pairs.emplace_back(cubes[a].first, cubes[b].first);
    }
  }
}

}  // namespace

VerificationReport verify_packing(const Certificate& certificate) {
  VerificationReport report;
  report.n = certificate.n;
  report.k = certificate.k;
  report.count = certificate.cubes.size();
  report.count_field_matches = certificate.count == certificate.cubes.size();

  std::vector<std::pair<std::size_t, Subcube>> valid;
  valid.reserve(certificate.cubes.size());
  for (std::size_t i = 0; i < certificate.cubes.size(); ++i) {
    const auto& raw = certificate.cubes[i];
    try {
      Subcube cube = make_subcube(certificate.n, raw.base, raw.dirs);
      if (cube.k() != certificate.k) report.wrong_dimension.push_back(i);
      valid.emplace_back(i, std::move(cube));
    } catch (const Error& e) {
      report.invalid_cubes.push_back(CubeIssue{i, e.what()});
    }
  }
  find_overlaps(valid, report);

  report.order = fib(certificate.n + 2);
  report.covered = SeqValue(report.count) << certificate.k;
  report.known_maximum = q_eval(certificate.k, certificate.n);

  if (!report.structurally_valid()) {
    report.verdict = Verdict::kInvalid;
  } else if (report.count > report.known_maximum) {
    report.verdict = Verdict::kExceedsKnownMaximum;
  } else if (report.count == report.known_maximum) {
    report.verdict = Verdict::kOptimal;
  } else {
    report.verdict = Verdict::kSuboptimal;
  }
  return report;
}

VerificationReport verify_packing(const Packing& packing) {
  return verify_packing(to_certificate(packing));
}

}  // namespace fibcube
