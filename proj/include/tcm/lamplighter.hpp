#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tcm/algebra.hpp"
#include "tcm/mealy.hpp"
#include "tcm/series.hpp"

/**
 * The lamplighter group A wr Z = (sum over Z of A) x| Z and its map into
 * affine maps of (A x A)[[t]].
 *
 * Generator convention: tau_a (state a of the twisted Cayley machine) is the
 * element (a at 0) * s, i.e. translation by (a, a) / (1 - t) after
 * multiplication by gamma. Words multiply left to right in the same order
 * act_word composes right to left, so word_to_lamplighter is a homomorphism
 * onto the automaton side.
 */
namespace tcm {

/// Finitely supported lamps: position -> nonzero element.
using LampConfig = std::map<std::int64_t, Element>;

class LamplighterElement {
public:
  explicit LamplighterElement(GroupPtr base) : base_(std::move(base)) {}
  /// Zero lamp values are dropped.
  LamplighterElement(GroupPtr base, LampConfig lamps, std::int64_t shift);

  static LamplighterElement identity(GroupPtr base) { return LamplighterElement(std::move(base)); }
  /// The shift generator s.
  static LamplighterElement shift_generator(GroupPtr base);
  /// a placed at position 0.
  static LamplighterElement lamp(GroupPtr base, Element a, std::int64_t position = 0);

  const GroupPtr &base() const { return base_; }
  const LampConfig &lamps() const { return lamps_; }
  std::int64_t shift() const { return shift_; }
  bool is_trivial() const { return lamps_.empty() && shift_ == 0; }

  LamplighterElement inverse() const;

  std::string to_string() const;

  /// (l1, n1) (l2, n2) = (l1 + l2 shifted by n1, n1 + n2)
  friend LamplighterElement operator*(const LamplighterElement &x, const LamplighterElement &y);
  friend bool operator==(const LamplighterElement &x, const LamplighterElement &y) {
    return same_base(x.base_, y.base_) && x.shift_ == y.shift_ && x.lamps_ == y.lamps_;
  }
  /// Total order on normal forms (for ordered containers).
  friend bool operator<(const LamplighterElement &x, const LamplighterElement &y) {
    if (x.shift_ != y.shift_)
      return x.shift_ < y.shift_;
    return x.lamps_ < y.lamps_;
  }

private:
  GroupPtr base_;
  LampConfig lamps_;
  std::int64_t shift_ = 0;
};

/// Words over {tau_a, tau_a^-1}; the state index is the element a.
using GeneratorWord = StateWord;

LamplighterElement generator_image(const GroupPtr &base, StateLetter g);
LamplighterElement word_to_lamplighter(const GroupPtr &base, const GeneratorWord &w);

/// Translation part h of the image of a lamp configuration:
/// sum over lamps of gamma^i (a, a) / (1 - t). Throws NegativePosition.
RationalPairSeries phi_h_of_lampconfig(const GroupPtr &base, const LampConfig &lamps);

/// True iff the configuration maps to the identity; only the empty
/// configuration should.
bool kernel_test(const GroupPtr &base, const LampConfig &lamps);

/**
 * Clears the denominator (1 - t)^(top + 1), top being the highest lamp
 * position, and evaluates the numerator at t = 1. Throws EmptyConfig and
 * NegativePosition.
 */
Pair leading_lamp_recovery(const GroupPtr &base, const LampConfig &lamps);

/// Translates positions so the lowest lamp sits at 0.
LampConfig normalize_window(const LampConfig &lamps);

/// Every configuration supported in [0, window] (|A|^(window+1) of them),
/// in mixed-radix order starting from the empty one.
std::vector<LampConfig> window_configs(const FiniteAbelianGroup &g, std::size_t window);

/// Truncated affine image: alpha of the lamp sum composed with mu_gamma^shift.
TruncatedAffineMap to_truncated_affine(const LamplighterElement &x, std::size_t depth);

/// Sphere sizes of the Cayley graph for generators tau_a^{+-1}, radius 0..r,
/// by breadth-first search over normal forms.
std::vector<std::uint64_t> lamplighter_sphere_sizes(const GroupPtr &base, std::size_t radius);

/// Parses "0:1,3:2@shift=1" (position:element-index pairs, optional shift).
LamplighterElement parse_lamp_literal(const GroupPtr &base, std::string_view text);

} // namespace tcm
