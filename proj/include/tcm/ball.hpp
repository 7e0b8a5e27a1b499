#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tcm/algebra.hpp"
#include "tcm/mealy.hpp"

namespace tcm {

struct BallOptions {
  GroupPtr group;
  std::size_t radius = 4;
  std::size_t depth = 6;
  /// Bound on |L|^depth.
  std::uint64_t portrait_cap = kDefaultPortraitCap;
  /// Bound on the number of enumerated words.
  std::uint64_t word_cap = std::uint64_t{1} << 21;
};

struct BallResult {
  std::size_t radius = 0;
  std::size_t depth = 0;
  /// Reduced words per length.
  std::vector<std::uint64_t> word_counts;
  /// Distinct portraits first reached at each length.
  std::vector<std::uint64_t> sphere_sizes;
  /// Breadth-first search over lamplighter normal forms.
  std::vector<std::uint64_t> oracle_sphere_sizes;
  /// Nontrivial elements by the smallest word length on which they act.
  std::map<std::size_t, std::uint64_t> separating_depths;
  std::uint64_t distinct_elements = 0;
  /// Word pairs whose portrait and lamplighter verdicts disagree.
  std::uint64_t disagreements = 0;
  std::string first_disagreement;

  bool consistent() const { return disagreements == 0 && sphere_sizes == oracle_sphere_sizes; }
};

/// Number of freely reduced words of each length 0..radius over `generators`
/// letters closed under inverse.
std::vector<std::uint64_t> reduced_word_counts(std::uint64_t generators, std::size_t radius);

/**
 * Enumerates every reduced word over tau_a^{+-1} up to the radius, computes
 * its depth-limited portrait on the twisted Cayley machine of the group and
 * its lamplighter image, and checks that the two partitions of the words
 * coincide. Throws CapExceeded or DepthTooLarge.
 */
BallResult run_ball(const BallOptions &options);

std::string to_string(const StateWord &w);

} // namespace tcm
