#include "tcm/series.hpp"

namespace tcm {

std::string detail::EndoRing::render(const Endo &e) {
  std::string out = "[";
  const auto &table = e.table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i)
      out += ' ';
    out += std::to_string(table[i]);
  }
  return out + "]";
}

EndoPoly operator*(const EndoPoly &a, const EndoPoly &b) {
  if (!same_base(a.base(), b.base()))
    throw BaseMismatch();
  if (a.is_zero() || b.is_zero())
    return EndoPoly(a.base());
  std::vector<Endo> c(a.coeffs().size() + b.coeffs().size() - 1, Endo::zero(a.base()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = c[i + j] + a.coeffs()[i] * b.coeffs()[j];
  return EndoPoly(a.base(), std::move(c));
}

PairPoly operator*(const EndoPoly &g, const PairPoly &f) {
  if (!same_base(g.base(), f.base()))
    throw BaseMismatch();
  if (g.is_zero() || f.is_zero())
    return PairPoly(g.base());
  const auto &grp = *g.base();
  std::vector<Pair> c(g.coeffs().size() + f.coeffs().size() - 1);
  for (std::size_t i = 0; i < g.coeffs().size(); ++i)
    for (std::size_t j = 0; j < f.coeffs().size(); ++j)
      c[i + j] = grp.pair_add(c[i + j], g.coeffs()[i](f.coeffs()[j]));
  return PairPoly(g.base(), std::move(c));
}

RationalEndoSeries operator*(const RationalEndoSeries &a, const RationalEndoSeries &b) {
  return RationalEndoSeries(a.numerator() * b.numerator(), a.denom_pow() + b.denom_pow());
}

RationalPairSeries operator*(const RationalEndoSeries &g, const RationalPairSeries &f) {
  return RationalPairSeries(g.numerator() * f.numerator(), g.denom_pow() + f.denom_pow());
}

RationalEndoSeries one(GroupPtr base) {
  auto id = Endo::identity(base);
  return RationalEndoSeries(EndoPoly::constant(std::move(base), std::move(id)));
}

RationalEndoSeries pow(const RationalEndoSeries &g, unsigned n) {
  RationalEndoSeries acc = one(g.base());
  RationalEndoSeries square = g;
  while (n > 0) {
    if (n & 1)
      acc = acc * square;
    n >>= 1;
    if (n)
      square = square * square;
  }
  return acc;
}

RationalEndoSeries gamma(GroupPtr base) {
  const Endo xi = endo_xi(base);
  const Endo zeta = endo_zeta(base);
  return RationalEndoSeries(EndoPoly(base, {xi, zeta - xi}), 1);
}

Pair letter_to_pair(const FiniteAbelianGroup &g, Letter l) { return g.pair_at(l); }

Letter pair_to_letter(const FiniteAbelianGroup &g, Pair p) {
  return static_cast<Letter>(g.pair_index(p));
}

std::vector<Pair> word_to_pairs(const FiniteAbelianGroup &g, std::span<const Letter> w) {
  std::vector<Pair> out;
  out.reserve(w.size());
  for (Letter l : w)
    out.push_back(letter_to_pair(g, l));
  return out;
}

Word pairs_to_word(const FiniteAbelianGroup &g, std::span<const Pair> f) {
  Word out;
  out.reserve(f.size());
  for (const Pair &p : f)
    out.push_back(pair_to_letter(g, p));
  return out;
}

// Truncated arithmetic

std::vector<Endo> trunc_mul(const GroupPtr &base, std::span<const Endo> a,
                            std::span<const Endo> b, std::size_t depth) {
  std::vector<Endo> c(depth + 1, Endo::zero(base));
  for (std::size_t i = 0; i < a.size() && i <= depth; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= depth; ++j)
      c[i + j] = c[i + j] + a[i] * b[j];
  return c;
}

std::vector<Pair> trunc_apply(const GroupPtr &base, std::span<const Endo> g,
                              std::span<const Pair> f, std::size_t depth) {
  std::vector<Pair> c(depth + 1);
  for (std::size_t i = 0; i < g.size() && i <= depth; ++i)
    for (std::size_t j = 0; j < f.size() && i + j <= depth; ++j)
      c[i + j] = base->pair_add(c[i + j], g[i](f[j]));
  return c;
}

std::vector<Pair> trunc_add(const GroupPtr &base, std::span<const Pair> a,
                            std::span<const Pair> b, std::size_t depth) {
  std::vector<Pair> c(depth + 1);
  for (std::size_t i = 0; i <= depth; ++i) {
    const Pair x = i < a.size() ? a[i] : Pair{};
    const Pair y = i < b.size() ? b[i] : Pair{};
    c[i] = base->pair_add(x, y);
  }
  return c;
}

std::vector<Endo> unit_inverse_trunc(const GroupPtr &base, std::span<const Endo> g,
                                     std::size_t depth) {
  if (g.empty() || !g[0].is_invertible())
    throw NotAUnit();
  const Endo g0_inv = g[0].inverse();
  std::vector<Endo> c;
  c.reserve(depth + 1);
  c.push_back(g0_inv);
  // c_n = -g0^-1 * sum_{j>=1} g_j c_{n-j}
  for (std::size_t n = 1; n <= depth; ++n) {
    Endo acc = Endo::zero(base);
    for (std::size_t j = 1; j <= n && j < g.size(); ++j)
      acc = acc + g[j] * c[n - j];
    c.push_back(-(g0_inv * acc));
  }
  return c;
}

std::vector<Endo> unit_inverse_trunc(const RationalEndoSeries &g, std::size_t depth) {
  return unit_inverse_trunc(g.base(), g.expand(depth), depth);
}

// AffineSeriesMap

AffineSeriesMap::AffineSeriesMap(RationalEndoSeries g, RationalPairSeries h)
    : g_(std::move(g)), h_(std::move(h)) {
  if (!same_base(g_.base(), h_.base()))
    throw BaseMismatch();
  if (g_.is_zero() || !g_.numerator().coeffs()[0].is_invertible())
    throw NotAUnit();
}

AffineSeriesMap AffineSeriesMap::identity(GroupPtr base) {
  return AffineSeriesMap(one(base), RationalPairSeries(PairPoly(base)));
}

AffineSeriesMap AffineSeriesMap::translation(RationalPairSeries h) {
  GroupPtr base = h.base();
  return AffineSeriesMap(one(base), std::move(h));
}

AffineSeriesMap AffineSeriesMap::multiplication(RationalEndoSeries g) {
  GroupPtr base = g.base();
  return AffineSeriesMap(std::move(g), RationalPairSeries(PairPoly(base)));
}

AffineSeriesMap AffineSeriesMap::alpha_of(GroupPtr base, Element a) {
  return translation(RationalPairSeries(PairPoly::constant(base, Pair{a, a}), 1));
}

std::vector<Pair> AffineSeriesMap::apply_trunc(std::span<const Pair> f, std::size_t depth) const {
  const auto &base = g_.base();
  const auto gf = trunc_apply(base, g_.expand(depth), f, depth);
  return trunc_add(base, gf, h_.expand(depth), depth);
}

AffineSeriesMap operator*(const AffineSeriesMap &a, const AffineSeriesMap &b) {
  return AffineSeriesMap(a.g_ * b.g_, a.g_ * b.h_ + a.h_);
}

// TruncatedAffineMap

TruncatedAffineMap::TruncatedAffineMap(GroupPtr base, std::size_t depth, std::vector<Endo> g,
                                       std::vector<Pair> h)
    : base_(std::move(base)), depth_(depth), g_(std::move(g)), h_(std::move(h)) {
  g_.resize(depth_ + 1, Endo::zero(base_));
  h_.resize(depth_ + 1);
  for (const auto &e : g_)
    if (!same_base(e.base(), base_))
      throw BaseMismatch();
  if (!g_[0].is_invertible())
    throw NotAUnit();
}

TruncatedAffineMap TruncatedAffineMap::identity(GroupPtr base, std::size_t depth) {
  auto id = Endo::identity(base);
  return TruncatedAffineMap(std::move(base), depth, {std::move(id)}, {});
}

TruncatedAffineMap TruncatedAffineMap::of(const AffineSeriesMap &m, std::size_t depth) {
  return TruncatedAffineMap(m.base(), depth, m.g().expand(depth), m.h().expand(depth));
}

std::vector<Pair> TruncatedAffineMap::apply(std::span<const Pair> f) const {
  return trunc_add(base_, trunc_apply(base_, g_, f, depth_), h_, depth_);
}

TruncatedAffineMap TruncatedAffineMap::inverse() const {
  // f = g^-1 (y - h)
  auto g_inv = unit_inverse_trunc(base_, g_, depth_);
  std::vector<Pair> neg_h(h_.size());
  for (std::size_t i = 0; i < h_.size(); ++i)
    neg_h[i] = base_->pair_neg(h_[i]);
  auto h_inv = trunc_apply(base_, g_inv, neg_h, depth_);
  return TruncatedAffineMap(base_, depth_, std::move(g_inv), std::move(h_inv));
}

TruncatedAffineMap operator*(const TruncatedAffineMap &a, const TruncatedAffineMap &b) {
  if (!same_base(a.base_, b.base_))
    throw BaseMismatch();
  const std::size_t depth = std::min(a.depth_, b.depth_);
  auto g = trunc_mul(a.base_, a.g_, b.g_, depth);
  auto h = trunc_add(a.base_, trunc_apply(a.base_, a.g_, b.h_, depth), a.h_, depth);
  return TruncatedAffineMap(a.base_, depth, std::move(g), std::move(h));
}

// Verification helpers

std::string render_coeffs(std::span<const Pair> f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i)
      out += ' ';
    out += to_string(f[i]);
  }
  return out + "]";
}

namespace {

std::string first_mismatch(std::span<const Pair> expected, std::span<const Pair> actual) {
  for (std::size_t i = 0; i < std::max(expected.size(), actual.size()); ++i) {
    const bool has_e = i < expected.size(), has_a = i < actual.size();
    if (!has_e || !has_a || expected[i] != actual[i])
      return "coefficient " + std::to_string(i) + ": " +
             (has_e ? to_string(expected[i]) : std::string("-")) + " vs " +
             (has_a ? to_string(actual[i]) : std::string("-"));
  }
  return {};
}

} // namespace

StateMapChecker::StateMapChecker(const MealyMachine &machine, GroupPtr base, std::size_t max_length)
    : machine_(machine), base_(std::move(base)), max_length_(std::max<std::size_t>(max_length, 1)) {
  const auto mu_gamma = AffineSeriesMap::multiplication(gamma(base_));
  for (Element a = 0; a < base_->order(); ++a)
    maps_.push_back(TruncatedAffineMap::of(AffineSeriesMap::alpha_of(base_, a) * mu_gamma,
                                           max_length_ - 1));
}

std::vector<Pair> StateMapChecker::series_side(Element a, std::span<const Pair> f) const {
  if (f.size() > max_length_)
    throw std::out_of_range("word longer than the checker's truncation");
  auto out = maps_.at(a).apply(f);
  out.resize(f.size());
  return out;
}

CheckResult StateMapChecker::check(Element a, std::span<const Letter> f) const {
  const auto &g = *base_;
  if (f.empty())
    return {};
  if (machine_.num_states() != g.order() || machine_.num_letters() != g.pair_count())
    return {false, "machine shape does not match A"};

  const auto pairs = word_to_pairs(g, f);
  const auto series = series_side(a, pairs);
  const auto automaton = word_to_pairs(g, act(machine_, a, f));

  if (auto diff = first_mismatch(series, automaton); !diff.empty())
    return {false, "state " + std::to_string(a) + " on " + render_coeffs(pairs) + ": series " +
                       render_coeffs(series) + " vs machine " + render_coeffs(automaton) + " (" +
                       diff + ")"};

  // head: (a + a1, a + a1 + a2); tail: same map for state a + a2 on the shifted series
  const Pair head = pairs[0];
  const Pair expected_head{g.add(a, head.first), g.add(g.add(a, head.first), head.second)};
  const Element next_state = g.add(a, head.second);
  if (series[0] != expected_head)
    return {false, "head mismatch for state " + std::to_string(a)};
  if (letter_to_pair(g, machine_.output(a, f[0])) != expected_head ||
      machine_.next(a, f[0]) != next_state)
    return {false, "machine step at state " + std::to_string(a) + " differs from the formulas"};
  const auto tail = series_side(next_state, std::span(pairs).subspan(1));
  if (!std::equal(tail.begin(), tail.end(), series.begin() + 1))
    return {false, "tail recursion mismatch for state " + std::to_string(a)};
  return {};
}

CheckResult verify_state_map(const MealyMachine &machine, const GroupPtr &base, Element a,
                          std::span<const Letter> f) {
  return StateMapChecker(machine, base, f.size()).check(a, f);
}

CheckResult verify_conjugation(const RationalEndoSeries &g, const RationalPairSeries &h,
                           std::span<const Pair> f, std::size_t depth) {
  const auto mu = TruncatedAffineMap::of(AffineSeriesMap::multiplication(g), depth);
  const auto alpha = TruncatedAffineMap::of(AffineSeriesMap::translation(h), depth);
  const auto conjugate = mu * alpha * mu.inverse();
  const auto direct = TruncatedAffineMap::of(AffineSeriesMap::translation(g * h), depth);

  const auto lhs = conjugate.apply(f);
  const auto rhs = direct.apply(f);
  if (auto diff = first_mismatch(rhs, lhs); !diff.empty())
    return {false, "conjugate " + render_coeffs(lhs) + " vs translation " + render_coeffs(rhs) +
                       " (" + diff + ")"};
  return {};
}

} // namespace tcm
