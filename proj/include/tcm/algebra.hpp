#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tcm/error.hpp"

/**
 * Finite monoids, finite abelian groups and the endomorphism ring End(A x A).
 *
 * Everything is stored as dense tables over a fixed element enumeration:
 * elements of a group or monoid are indices 0..n-1, and pairs (a, b) of
 * A x A are indexed lexicographically as a * |A| + b.
 */
namespace tcm {

using Element = std::uint32_t;

/// An element of A x A.
struct Pair {
  Element first = 0;
  Element second = 0;

  friend auto operator<=>(const Pair &, const Pair &) = default;
};

std::string to_string(Pair p);

class FiniteMonoid {
public:
  /// Validates the table exhaustively; throws IdentityViolation or
  /// AssociativityViolation with a witness.
  static FiniteMonoid from_table(const std::vector<std::vector<Element>> &table, Element identity);

  /// Same, with the identity located by search (IdentityViolation(0) if none).
  static FiniteMonoid from_table(const std::vector<std::vector<Element>> &table);

  std::size_t size() const { return size_; }
  Element identity() const { return identity_; }
  Element mul(Element x, Element y) const { return table_[x * size_ + y]; }

  bool is_group() const { return inverses_.has_value(); }
  bool is_commutative() const;

  /// Two-sided inverse; throws NotInvertible when the monoid is not a group.
  Element inverse(Element x) const;

  std::vector<std::vector<Element>> rows() const;

private:
  FiniteMonoid(std::size_t size, std::vector<Element> table, Element identity);

  std::size_t size_;
  std::vector<Element> table_;
  Element identity_;
  std::optional<std::vector<Element>> inverses_;
};

/**
 * Z/n1 x ... x Z/nk. Elements enumerate residue tuples lexicographically,
 * so the last factor varies fastest. The zero element has index 0.
 */
class FiniteAbelianGroup {
public:
  explicit FiniteAbelianGroup(std::vector<std::uint32_t> factors);

  const std::vector<std::uint32_t> &factors() const { return factors_; }
  std::size_t order() const { return order_; }
  std::uint32_t exponent() const { return exponent_; }

  Element zero() const { return 0; }
  Element add(Element x, Element y) const { return add_[x * order_ + y]; }
  Element neg(Element x) const { return neg_[x]; }
  Element sub(Element x, Element y) const { return add(x, neg(y)); }
  Element times(Element x, std::int64_t k) const;

  std::vector<std::uint32_t> residues(Element x) const;
  Element from_residues(std::span<const std::uint32_t> residues) const;

  /// "2x2" style spec string.
  std::string spec() const;

  FiniteMonoid monoid() const;

  std::size_t pair_count() const { return order_ * order_; }
  std::size_t pair_index(Pair p) const { return p.first * order_ + p.second; }
  Pair pair_at(std::size_t index) const {
    return {static_cast<Element>(index / order_), static_cast<Element>(index % order_)};
  }
  Pair pair_add(Pair p, Pair q) const { return {add(p.first, q.first), add(p.second, q.second)}; }
  Pair pair_neg(Pair p) const { return {neg(p.first), neg(p.second)}; }
  Pair pair_times(Pair p, std::int64_t k) const { return {times(p.first, k), times(p.second, k)}; }

  friend bool operator==(const FiniteAbelianGroup &a, const FiniteAbelianGroup &b) {
    return a.factors_ == b.factors_;
  }

private:
  std::vector<std::uint32_t> factors_;
  std::size_t order_;
  std::uint32_t exponent_;
  std::vector<Element> add_;
  std::vector<Element> neg_;
};

using GroupPtr = std::shared_ptr<const FiniteAbelianGroup>;

/// Rejects an empty list or any factor below 2.
GroupPtr make_cyclic_product(std::vector<std::uint32_t> factors);

/// Parses "n1xn2x...xnk".
GroupPtr parse_group_spec(std::string_view spec);

bool same_base(const GroupPtr &a, const GroupPtr &b);

/// An additive endomorphism of A x A, stored as its full table on pair indices.
class Endo {
public:
  /// Tabulates f and checks additivity exhaustively (NotAdditive otherwise).
  static Endo from_function(GroupPtr base, const std::function<Pair(Pair)> &f);
  /// Wraps a raw table of pair indices; same check as from_function.
  static Endo from_table(GroupPtr base, std::vector<std::uint32_t> table);

  static Endo identity(GroupPtr base);
  static Endo zero(GroupPtr base);
  /// k times the identity.
  static Endo scalar(GroupPtr base, std::int64_t k);

  const GroupPtr &base() const { return base_; }
  const FiniteAbelianGroup &group() const { return *base_; }

  Pair operator()(Pair p) const { return base_->pair_at(table_[base_->pair_index(p)]); }
  std::uint32_t apply_index(std::uint32_t pair_index) const { return table_[pair_index]; }
  const std::vector<std::uint32_t> &table() const { return table_; }

  bool is_zero() const;
  bool is_additive() const;
  bool is_invertible() const;
  /// Throws NotInvertible when the table is not a bijection.
  Endo inverse() const;

  Endo times(std::int64_t k) const;

  friend Endo operator+(const Endo &a, const Endo &b);
  friend Endo operator-(const Endo &a, const Endo &b);
  friend Endo operator-(const Endo &a);
  /// Composition: (a * b)(x) = a(b(x)).
  friend Endo operator*(const Endo &a, const Endo &b);
  friend bool operator==(const Endo &a, const Endo &b);

private:
  Endo(GroupPtr base, std::vector<std::uint32_t> table)
      : base_(std::move(base)), table_(std::move(table)) {}

  GroupPtr base_;
  std::vector<std::uint32_t> table_;
};

/// (a, b) -> (a, a + b)
Endo endo_xi(GroupPtr base);
/// (a, b) -> (b, b)
Endo endo_zeta(GroupPtr base);

} // namespace tcm
