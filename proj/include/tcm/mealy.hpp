#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tcm/algebra.hpp"

namespace tcm {

using State = std::uint32_t;
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/**
 * A Mealy automaton (Q, L, output, transition) with dense |Q| x |L| tables.
 *
 * States and letters are indices; names are carried for serialization only.
 */
class MealyMachine {
public:
  /// Throws InvalidMachine on out-of-range entries, size mismatches or
  /// duplicate names.
  MealyMachine(std::vector<std::string> state_names, std::vector<std::string> letter_names,
               std::vector<Letter> output, std::vector<State> transition);

  std::size_t num_states() const { return state_names_.size(); }
  std::size_t num_letters() const { return letter_names_.size(); }

  Letter output(State q, Letter l) const { return output_[q * num_letters() + l]; }
  State next(State q, Letter l) const { return transition_[q * num_letters() + l]; }

  const std::vector<std::string> &state_names() const { return state_names_; }
  const std::vector<std::string> &letter_names() const { return letter_names_; }
  const std::vector<Letter> &output_table() const { return output_; }
  const std::vector<State> &transition_table() const { return transition_; }

  friend bool operator==(const MealyMachine &, const MealyMachine &) = default;

private:
  std::vector<std::string> state_names_;
  std::vector<std::string> letter_names_;
  std::vector<Letter> output_;
  std::vector<State> transition_;
};

/// Every output row output(q, .) is a permutation of L.
bool is_invertible(const MealyMachine &m);
/// Every transition column next(., l) is a permutation of Q.
bool is_reversible(const MealyMachine &m);
/// Invertible, reversible, and (q, l) -> (output, next) is a bijection Q x L -> L x Q.
bool is_bireversible(const MealyMachine &m);

/// States = letters = M; output and transition both m1 * m2.
MealyMachine cayley_machine(const FiniteMonoid &monoid);

/// States M, letters M x M (index b * |M| + c);
/// output(a, (b, c)) = (ab, abc), transition(a, (b, c)) = ac.
MealyMachine twisted_cayley_machine(const FiniteMonoid &monoid);

/// Throws NotInvertible unless is_invertible(m).
MealyMachine inverse_machine(const MealyMachine &m);

/// Swaps the roles of states and letters: output'(l, q) = next(q, l),
/// next'(l, q) = output(q, l).
MealyMachine dual_machine(const MealyMachine &m);

/// Image of w under the state map of q.
Word act(const MealyMachine &m, State q, std::span<const Letter> w);

struct StateLetter {
  State state = 0;
  int exponent = 1; // +1 or -1

  friend bool operator==(const StateLetter &, const StateLetter &) = default;
};

/// A word in the state maps and their inverses. Empty means the identity.
using StateWord = std::vector<StateLetter>;

/// Composes right to left: the last entry acts first. Uses inverse_machine
/// for negative exponents (NotInvertible if the machine has none).
Word act_word(const MealyMachine &m, const StateWord &sw, std::span<const Letter> w);

inline constexpr std::uint64_t kDefaultPortraitCap = 65536; // 4^8

/**
 * The action of a group element on all |L|^depth words of a fixed length.
 *
 * images[i] is the index of the image of the i-th word, with words
 * enumerated lexicographically (first letter most significant).
 */
class Portrait {
public:
  Portrait(std::size_t depth, std::size_t alphabet, std::vector<std::uint32_t> images)
      : depth_(depth), alphabet_(alphabet), images_(std::move(images)) {}

  std::size_t depth() const { return depth_; }
  std::size_t alphabet() const { return alphabet_; }
  const std::vector<std::uint32_t> &images() const { return images_; }

  /// 64-bit digest of the image table.
  std::uint64_t fingerprint() const;

  bool is_identity() const;
  /// Smallest k such that some word of length k is moved; 0 for the identity.
  std::size_t separating_depth() const;

  friend bool operator==(const Portrait &, const Portrait &) = default;

private:
  std::size_t depth_;
  std::size_t alphabet_;
  std::vector<std::uint32_t> images_;
};

/// Throws DepthTooLarge if |L|^depth exceeds cap.
std::uint64_t word_count(std::size_t alphabet, std::size_t depth, std::uint64_t cap);

Portrait portrait(const MealyMachine &m, const StateWord &sw, std::size_t depth,
                  std::uint64_t cap = kDefaultPortraitCap);

/**
 * Precomputed depth-d portraits of every generator and its inverse, so that
 * extending a word by one letter on the left costs one lookup per word.
 */
class PortraitTables {
public:
  PortraitTables(const MealyMachine &m, std::size_t depth, std::uint64_t cap = kDefaultPortraitCap);

  std::size_t depth() const { return depth_; }
  std::size_t alphabet() const { return alphabet_; }
  std::size_t size() const { return size_; }

  /// Table of the generator (state, exponent).
  const std::vector<std::uint32_t> &table(StateLetter g) const;

  /// images <- g o images
  void apply_left(StateLetter g, std::vector<std::uint32_t> &images) const;

  Portrait identity() const;
  Portrait of(const StateWord &sw) const;

private:
  std::size_t depth_;
  std::size_t alphabet_;
  std::size_t size_;
  std::vector<std::vector<std::uint32_t>> forward_;
  std::vector<std::vector<std::uint32_t>> backward_;
};

/// Graphviz rendering: one node per state, edge q -> next(q, l) labeled "l | output(q, l)".
std::string to_dot(const MealyMachine &m);

} // namespace tcm
