#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tcm/algebra.hpp"
#include "tcm/mealy.hpp"

/**
 * Exact arithmetic over R = End(A x A) and the module A x A with a central
 * variable t.
 *
 * Polynomials are finite coefficient lists. Rational series are restricted
 * to p(t) / (1 - t)^k; since 1 - t is central, such forms add and multiply
 * by clearing denominators, and a form is canonical once p(1) != 0 or
 * k == 0. Inverses of units that have no such form (gamma^-1 for example)
 * are only available as truncations.
 */
namespace tcm {

namespace detail {

struct PairModule {
  using Coeff = Pair;
  static Pair zero(const GroupPtr &) { return {}; }
  static bool is_zero(const Pair &p) { return p == Pair{}; }
  static Pair add(const GroupPtr &g, const Pair &x, const Pair &y) { return g->pair_add(x, y); }
  static Pair neg(const GroupPtr &g, const Pair &x) { return g->pair_neg(x); }
  static Pair times(const GroupPtr &g, const Pair &x, std::int64_t k) { return g->pair_times(x, k); }
  static std::string render(const Pair &p) { return to_string(p); }
};

struct EndoRing {
  using Coeff = Endo;
  static Endo zero(const GroupPtr &g) { return Endo::zero(g); }
  static bool is_zero(const Endo &e) { return e.is_zero(); }
  static Endo add(const GroupPtr &, const Endo &x, const Endo &y) { return x + y; }
  static Endo neg(const GroupPtr &, const Endo &x) { return -x; }
  static Endo times(const GroupPtr &, const Endo &x, std::int64_t k) { return x.times(k); }
  static std::string render(const Endo &e);
};

} // namespace detail

/// Polynomial in a central variable t with coefficients in A x A or in R.
template <typename Ops> class Polynomial {
public:
  using Coeff = typename Ops::Coeff;

  explicit Polynomial(GroupPtr base) : base_(std::move(base)) {}
  Polynomial(GroupPtr base, std::vector<Coeff> coeffs)
      : base_(std::move(base)), coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial constant(GroupPtr base, Coeff c) { return Polynomial(base, {std::move(c)}); }
  static Polynomial monomial(GroupPtr base, Coeff c, std::size_t degree) {
    std::vector<Coeff> coeffs(degree + 1, Ops::zero(base));
    coeffs[degree] = std::move(c);
    return Polynomial(std::move(base), std::move(coeffs));
  }

  const GroupPtr &base() const { return base_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Coeff> coeffs() const { return coeffs_; }
  Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Ops::zero(base_); }

  /// Sum of the coefficients.
  Coeff eval_at_one() const {
    Coeff acc = Ops::zero(base_);
    for (const auto &c : coeffs_)
      acc = Ops::add(base_, acc, c);
    return acc;
  }

  Polynomial times_one_minus_t(unsigned k = 1) const {
    std::vector<Coeff> c = coeffs_;
    for (unsigned r = 0; r < k && !c.empty(); ++r) {
      c.push_back(Ops::zero(base_));
      for (std::size_t i = c.size() - 1; i > 0; --i)
        c[i] = Ops::add(base_, c[i], Ops::neg(base_, c[i - 1]));
    }
    return Polynomial(base_, std::move(c));
  }

  /// Exact quotient by (1 - t); requires eval_at_one() == 0.
  Polynomial divide_one_minus_t() const {
    if (!Ops::is_zero(eval_at_one()))
      throw std::logic_error("polynomial is not divisible by 1 - t");
    std::vector<Coeff> q;
    Coeff acc = Ops::zero(base_);
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
      acc = Ops::add(base_, acc, coeffs_[i]);
      q.push_back(acc);
    }
    return Polynomial(base_, std::move(q));
  }

  /// Multiplication by t^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero())
      return *this;
    std::vector<Coeff> c(k, Ops::zero(base_));
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(base_, std::move(c));
  }

  Polynomial scaled(std::int64_t k) const {
    std::vector<Coeff> c;
    for (const auto &x : coeffs_)
      c.push_back(Ops::times(base_, x, k));
    return Polynomial(base_, std::move(c));
  }

  /// First depth + 1 coefficients of this / (1 - t)^denom_pow. Each factor
  /// 1 / (1 - t) is a running sum.
  std::vector<Coeff> expand(std::size_t depth, unsigned denom_pow = 0) const {
    std::vector<Coeff> out;
    out.reserve(depth + 1);
    for (std::size_t i = 0; i <= depth; ++i)
      out.push_back(coeff(i));
    for (unsigned r = 0; r < denom_pow; ++r)
      for (std::size_t i = 1; i <= depth; ++i)
        out[i] = Ops::add(base_, out[i], out[i - 1]);
    return out;
  }

  std::string to_string() const {
    if (is_zero())
      return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (Ops::is_zero(coeffs_[i]))
        continue;
      if (!out.empty())
        out += " + ";
      out += Ops::render(coeffs_[i]);
      if (i == 1)
        out += "·t";
      else if (i > 1)
        out += "·t^" + std::to_string(i);
    }
    return out;
  }

  friend Polynomial operator+(const Polynomial &a, const Polynomial &b) {
    check(a, b);
    std::vector<Coeff> c;
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i)
      c.push_back(Ops::add(a.base_, a.coeff(i), b.coeff(i)));
    return Polynomial(a.base_, std::move(c));
  }
  friend Polynomial operator-(const Polynomial &a) {
    std::vector<Coeff> c;
    for (const auto &x : a.coeffs_)
      c.push_back(Ops::neg(a.base_, x));
    return Polynomial(a.base_, std::move(c));
  }
  friend Polynomial operator-(const Polynomial &a, const Polynomial &b) { return a + (-b); }
  friend bool operator==(const Polynomial &a, const Polynomial &b) {
    return same_base(a.base_, b.base_) && a.coeffs_ == b.coeffs_;
  }

private:
  static void check(const Polynomial &a, const Polynomial &b) {
    if (!same_base(a.base_, b.base_))
      throw BaseMismatch();
  }

  void trim() {
    while (!coeffs_.empty() && Ops::is_zero(coeffs_.back()))
      coeffs_.pop_back();
  }

  GroupPtr base_;
  std::vector<Coeff> coeffs_;
};

using PairPoly = Polynomial<detail::PairModule>;
using EndoPoly = Polynomial<detail::EndoRing>;

EndoPoly operator*(const EndoPoly &a, const EndoPoly &b);
PairPoly operator*(const EndoPoly &g, const PairPoly &f);

/// num(t) / (1 - t)^denom_pow in canonical form.
template <typename Ops> class RationalSeries {
public:
  using Poly = Polynomial<Ops>;
  using Coeff = typename Ops::Coeff;

  explicit RationalSeries(Poly num, unsigned denom_pow = 0)
      : num_(std::move(num)), denom_pow_(denom_pow) {
    if (num_.is_zero())
      denom_pow_ = 0;
    while (denom_pow_ > 0 && Ops::is_zero(num_.eval_at_one())) {
      num_ = num_.divide_one_minus_t();
      --denom_pow_;
    }
  }

  const GroupPtr &base() const { return num_.base(); }
  const Poly &numerator() const { return num_; }
  unsigned denom_pow() const { return denom_pow_; }
  bool is_zero() const { return num_.is_zero(); }

  std::vector<Coeff> expand(std::size_t depth) const { return num_.expand(depth, denom_pow_); }

  /// Numerator after multiplying through by (1 - t)^k; requires k >= denom_pow().
  Poly cleared(unsigned k) const {
    if (k < denom_pow_)
      throw std::logic_error("clearing exponent below the denominator power");
    return num_.times_one_minus_t(k - denom_pow_);
  }

  std::string to_string() const {
    std::string out = num_.to_string();
    if (denom_pow_ == 1)
      out = "(" + out + ") / (1-t)";
    else if (denom_pow_ > 1)
      out = "(" + out + ") / (1-t)^" + std::to_string(denom_pow_);
    return out;
  }

  friend RationalSeries operator+(const RationalSeries &a, const RationalSeries &b) {
    const unsigned k = std::max(a.denom_pow_, b.denom_pow_);
    return RationalSeries(a.cleared(k) + b.cleared(k), k);
  }
  friend RationalSeries operator-(const RationalSeries &a) {
    return RationalSeries(-a.num_, a.denom_pow_);
  }
  friend RationalSeries operator-(const RationalSeries &a, const RationalSeries &b) {
    return a + (-b);
  }
  friend bool operator==(const RationalSeries &a, const RationalSeries &b) {
    return a.denom_pow_ == b.denom_pow_ && a.num_ == b.num_;
  }

private:
  Poly num_;
  unsigned denom_pow_;
};

using RationalPairSeries = RationalSeries<detail::PairModule>;
using RationalEndoSeries = RationalSeries<detail::EndoRing>;

RationalEndoSeries operator*(const RationalEndoSeries &a, const RationalEndoSeries &b);
RationalPairSeries operator*(const RationalEndoSeries &g, const RationalPairSeries &f);

RationalEndoSeries one(GroupPtr base);
RationalEndoSeries pow(const RationalEndoSeries &g, unsigned n);

/// (xi + (zeta - xi) t) / (1 - t) = xi + zeta t + zeta t^2 + ...
RationalEndoSeries gamma(GroupPtr base);

/// Letters of the twisted Cayley machine of A are exactly the pairs of A x A.
Pair letter_to_pair(const FiniteAbelianGroup &g, Letter l);
Letter pair_to_letter(const FiniteAbelianGroup &g, Pair p);
std::vector<Pair> word_to_pairs(const FiniteAbelianGroup &g, std::span<const Letter> w);
Word pairs_to_word(const FiniteAbelianGroup &g, std::span<const Pair> f);

// Truncated series: coefficient lists standing for prefixes of power series.
// Missing coefficients read as zero.

std::vector<Endo> trunc_mul(const GroupPtr &base, std::span<const Endo> a,
                            std::span<const Endo> b, std::size_t depth);
std::vector<Pair> trunc_apply(const GroupPtr &base, std::span<const Endo> g,
                              std::span<const Pair> f, std::size_t depth);
std::vector<Pair> trunc_add(const GroupPtr &base, std::span<const Pair> a,
                            std::span<const Pair> b, std::size_t depth);

/// c with g c = 1 mod t^{depth+1}; throws NotAUnit unless g[0] is invertible.
std::vector<Endo> unit_inverse_trunc(const GroupPtr &base, std::span<const Endo> g,
                                     std::size_t depth);
std::vector<Endo> unit_inverse_trunc(const RationalEndoSeries &g, std::size_t depth);

/**
 * f -> g f + h on (A x A)[[t]], with g a unit of R[[t]].
 *
 * Translations (g = 1) and multiplications (h = 0) are the two degenerate
 * shapes; composites of them stay affine.
 */
class AffineSeriesMap {
public:
  /// Throws NotAUnit if g's constant coefficient is not invertible and
  /// BaseMismatch if g and h disagree on the group.
  AffineSeriesMap(RationalEndoSeries g, RationalPairSeries h);

  static AffineSeriesMap identity(GroupPtr base);
  static AffineSeriesMap translation(RationalPairSeries h);
  static AffineSeriesMap multiplication(RationalEndoSeries g);
  /// Translation by (a, a) / (1 - t).
  static AffineSeriesMap alpha_of(GroupPtr base, Element a);

  const RationalEndoSeries &g() const { return g_; }
  const RationalPairSeries &h() const { return h_; }
  const GroupPtr &base() const { return g_.base(); }

  /// First depth + 1 coefficients of g f + h.
  std::vector<Pair> apply_trunc(std::span<const Pair> f, std::size_t depth) const;

  /// (g1, h1) o (g2, h2) = (g1 g2, g1 h2 + h1)
  friend AffineSeriesMap operator*(const AffineSeriesMap &a, const AffineSeriesMap &b);
  friend bool operator==(const AffineSeriesMap &a, const AffineSeriesMap &b) {
    return a.g_ == b.g_ && a.h_ == b.h_;
  }

private:
  RationalEndoSeries g_;
  RationalPairSeries h_;
};

/// The same affine maps, known only modulo t^{depth+1}. Closed under inverse.
class TruncatedAffineMap {
public:
  TruncatedAffineMap(GroupPtr base, std::size_t depth, std::vector<Endo> g, std::vector<Pair> h);

  static TruncatedAffineMap identity(GroupPtr base, std::size_t depth);
  static TruncatedAffineMap of(const AffineSeriesMap &m, std::size_t depth);

  const GroupPtr &base() const { return base_; }
  std::size_t depth() const { return depth_; }
  const std::vector<Endo> &g() const { return g_; }
  const std::vector<Pair> &h() const { return h_; }

  std::vector<Pair> apply(std::span<const Pair> f) const;
  /// Throws NotAUnit.
  TruncatedAffineMap inverse() const;

  friend TruncatedAffineMap operator*(const TruncatedAffineMap &a, const TruncatedAffineMap &b);
  friend bool operator==(const TruncatedAffineMap &a, const TruncatedAffineMap &b) {
    return same_base(a.base_, b.base_) && a.depth_ == b.depth_ && a.g_ == b.g_ && a.h_ == b.h_;
  }

private:
  GroupPtr base_;
  std::size_t depth_;
  std::vector<Endo> g_;
  std::vector<Pair> h_;
};

struct CheckResult {
  bool ok = true;
  std::string diff; // first mismatch, empty when ok
};

/**
 * Compares the machine's state map against the series map
 * f -> gamma f + (a, a) / (1 - t), and checks that the series side splits
 * as output(a, f0) followed by the same map for state a + f0.second on the
 * tail. Caches one truncated map per state.
 */
class StateMapChecker {
public:
  StateMapChecker(const MealyMachine &machine, GroupPtr base, std::size_t max_length);

  CheckResult check(Element a, std::span<const Letter> f) const;
  /// The series side alone, truncated to |f| coefficients.
  std::vector<Pair> series_side(Element a, std::span<const Pair> f) const;

private:
  MealyMachine machine_;
  GroupPtr base_;
  std::size_t max_length_;
  std::vector<TruncatedAffineMap> maps_;
};

/// One-shot form of StateMapChecker. |f| >= 1.
CheckResult verify_state_map(const MealyMachine &machine, const GroupPtr &base, Element a,
                          std::span<const Letter> f);

/// mu_g o alpha_h o mu_g^-1 (built from truncations) against alpha_{g h}
/// (from the exact product), both applied to f at the given depth.
CheckResult verify_conjugation(const RationalEndoSeries &g, const RationalPairSeries &h,
                           std::span<const Pair> f, std::size_t depth);

std::string render_coeffs(std::span<const Pair> f);

} // namespace tcm
