#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stoim/ascent.hpp"
#include "stoim/matching.hpp"

namespace stoim {

/// Largest arc count accepted by the exhaustive generators.
inline constexpr int kMaxEnumerationArcs = 10;

/// All Stoimenow matchings with n arcs, ordered lexicographically by
/// their involution vectors. Generated by backtracking over arc
/// placements with incremental pruning of neighbor nestings; jobs > 1
/// splits the search on the first arc's closer without changing the
/// output bytes.
std::vector<Matching> enumerate_matchings(int n, int jobs = 1);

/// |C_n| by exhaustive generation.
BigInt count_matchings(int n, int jobs = 1);

/// Outcome of checking the encode/decode correspondence at one size.
struct CensusReport {
  int n = 0;
  std::uint64_t matching_count = 0;
  std::uint64_t sequence_count = 0;
  bool bijective = false;
  std::vector<std::pair<Matching, std::string>> failures;

  std::string to_string() const;
};

/// Encodes every matching with n arcs and checks sequence validity,
/// pairwise distinctness, decode-of-encode identity, the statistic
/// updates along every removal chain, and count agreement with A_n.
CensusReport verify_bijection(int n);

}  // namespace stoim
