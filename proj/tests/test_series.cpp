#include <doctest.h>

#include "oracles.hpp"
#include "tcm/sampling.hpp"
#include "tcm/series.hpp"

using namespace tcm;

namespace {

GroupPtr group(std::vector<std::uint32_t> factors) { return make_cyclic_product(std::move(factors)); }

RationalPairSeries pair_over(const GroupPtr &g, std::vector<Pair> num, unsigned k) {
  return RationalPairSeries(PairPoly(g, std::move(num)), k);
}

RationalEndoSeries endo_over(const GroupPtr &g, std::vector<Endo> num, unsigned k) {
  return RationalEndoSeries(EndoPoly(g, std::move(num)), k);
}

std::vector<Pair> oracle_expand(const GroupPtr &g, const RationalPairSeries &s, std::size_t depth) {
  const auto c = s.numerator().coeffs();
  return oracle::binomial_expand(
      std::vector<Pair>(c.begin(), c.end()), s.denom_pow(), depth, Pair{},
      [&](Pair x, Pair y) { return g->pair_add(x, y); },
      [&](Pair x, std::int64_t k) { return g->pair_times(x, k); });
}

std::vector<Endo> oracle_expand(const GroupPtr &g, const RationalEndoSeries &s, std::size_t depth) {
  const auto c = s.numerator().coeffs();
  return oracle::binomial_expand(
      std::vector<Endo>(c.begin(), c.end()), s.denom_pow(), depth, Endo::zero(g),
      [](const Endo &x, const Endo &y) { return x + y; },
      [](const Endo &x, std::int64_t k) { return x.times(k); });
}

/// Cauchy product of truncations, written out directly.
std::vector<Pair> convolve(const GroupPtr &g, const std::vector<Endo> &a, const std::vector<Pair> &b) {
  std::vector<Pair> out(b.size());
  for (std::size_t n = 0; n < b.size(); ++n)
    for (std::size_t i = 0; i <= n; ++i)
      out[n] = g->pair_add(out[n], a[i](b[n - i]));
  return out;
}

std::vector<Pair> pairs_of(const FiniteAbelianGroup &g, const Word &w) {
  std::vector<Pair> out;
  for (Letter l : w)
    out.push_back(g.pair_at(l));
  return out;
}

} // namespace

TEST_CASE("expansion by prefix sums matches binomial coefficients") {
  auto g = group({2, 3});
  sampling::Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto s = sampling::pair_series(rng, g, 4, 4);
    CHECK(s.expand(10) == oracle_expand(g, s, 10));
    auto e = sampling::endo_series(rng, g, 3, 3);
    CHECK(e.expand(6) == oracle_expand(g, e, 6));
  }
}

TEST_CASE("rational forms cancel powers of 1 - t") {
  auto g = group({3});
  auto id = Endo::identity(g);
  auto one_minus_t = endo_over(g, {id, -id}, 0);
  auto geometric = endo_over(g, {id}, 1);
  CHECK(one_minus_t * geometric == one(g));
  CHECK((one_minus_t * geometric).denom_pow() == 0);

  auto r = RationalPairSeries(PairPoly(g, {Pair{1, 1}}).times_one_minus_t(2), 3);
  CHECK(r.denom_pow() == 1);
  CHECK(r.numerator() == PairPoly(g, {Pair{1, 1}}));
  CHECK(RationalPairSeries(PairPoly(g), 4).denom_pow() == 0);
  CHECK(r.to_string() == "((1,1)) / (1-t)");
}

TEST_CASE("polynomial helpers") {
  auto g = group({5});
  sampling::Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    PairPoly p(g, sampling::pair_coeffs(rng, *g, 5));
    CHECK(p.times_one_minus_t().eval_at_one() == Pair{});
    CHECK(p.times_one_minus_t().divide_one_minus_t() == p);
    CHECK(p.shifted(2).coeff(2) == p.coeff(0));
    CHECK(p.scaled(5).is_zero());
  }
  CHECK(PairPoly(g).eval_at_one() == Pair{});
  CHECK(PairPoly(g).degree() == -1);
  CHECK_THROWS_AS(PairPoly(g, {Pair{1, 0}}).divide_one_minus_t(), std::logic_error);
  CHECK(PairPoly(g, {Pair{1, 2}, Pair{}, Pair{3, 4}}).to_string() == "(1,2) + (3,4)·t^2");
}

TEST_CASE("gamma") {
  for (auto g : {group({2}), group({3}), group({2, 2}), group({6})}) {
    const auto xi = endo_xi(g), zeta = endo_zeta(g);
    const auto gm = gamma(g);
    CHECK(gm.expand(2) == std::vector<Endo>{xi, zeta, zeta});
    CHECK(gm.expand(3) == std::vector<Endo>{xi, zeta, zeta, zeta});
    CHECK(gm.denom_pow() == 1);
    CHECK(gm.numerator().eval_at_one() == zeta);
    CHECK(pow(gm, 0) == one(g));
    CHECK(pow(gm, 3) == gm * gm * gm);
  }
}

TEST_CASE("geometric series of pairs") {
  auto g = group({3});
  for (Element a = 0; a < 3; ++a) {
    auto h = pair_over(g, {Pair{a, a}}, 1);
    CHECK(h.expand(2) == std::vector<Pair>(3, Pair{a, a}));
    // zeta t applied to (a, a) / (1 - t)
    auto zt = RationalEndoSeries(EndoPoly::monomial(g, endo_zeta(g), 1));
    auto expected = a == 0 ? pair_over(g, {}, 0) : pair_over(g, {Pair{}, Pair{a, a}}, 1);
    CHECK(zt * h == expected);
  }
  CHECK(pair_over(g, {}, 0).expand(4) == std::vector<Pair>(5));
}

TEST_CASE("truncated unit inverses") {
  auto g = group({2});
  auto id = Endo::identity(g);
  std::vector<Endo> unit(6, Endo::zero(g));
  unit[0] = id;
  CHECK(unit_inverse_trunc(one(g), 5) == unit);
  auto one_minus_t = endo_over(g, {id, -id}, 0);
  auto inv = unit_inverse_trunc(one_minus_t, 5);
  CHECK(inv == std::vector<Endo>(6, id));

  for (auto base : {group({2}), group({3})}) {
    const auto gm = gamma(base).expand(6);
    const auto ginv = unit_inverse_trunc(base, gm, 6);
    auto product = trunc_mul(base, gm, ginv, 6);
    CHECK(product[0] == Endo::identity(base));
    for (std::size_t i = 1; i <= 6; ++i)
      CHECK(product[i].is_zero());
  }

  const std::vector<Endo> zeta{endo_zeta(g)};
  CHECK_THROWS_AS(unit_inverse_trunc(g, zeta, 3), NotAUnit);
}

TEST_CASE("series arithmetic agrees with truncated expansions") {
  for (auto g : {group({2}), group({4}), group({2, 2})}) {
    sampling::Rng rng(g->order());
    for (int trial = 0; trial < 25; ++trial) {
      auto a = sampling::endo_series(rng, g, 3, 2);
      auto b = sampling::endo_series(rng, g, 3, 2);
      auto f = sampling::pair_series(rng, g, 3, 2);
      auto h = sampling::pair_series(rng, g, 3, 2);
      const std::size_t d = 8;
      CHECK((a * f).expand(d) == convolve(g, oracle_expand(g, a, d), oracle_expand(g, f, d)));
      CHECK((f + h).expand(d) == trunc_add(g, f.expand(d), h.expand(d), d));
      CHECK((a * b).expand(d) == trunc_mul(g, a.expand(d), b.expand(d), d));
      // distributivity
      CHECK(a * (f + h) == a * f + a * h);
      CHECK((a + b) * f == a * f + b * f);
      CHECK(f - f == pair_over(g, {}, 0));
    }
  }
}

TEST_CASE("affine maps") {
  auto g = group({3});
  const std::size_t d = 6;
  for (Element a = 0; a < 3; ++a) {
    auto alpha = AffineSeriesMap::alpha_of(g, a);
    CHECK(alpha.apply_trunc(std::vector<Pair>(d + 1), d) == std::vector<Pair>(d + 1, Pair{a, a}));
    CHECK(alpha * AffineSeriesMap::identity(g) == alpha);
    CHECK(AffineSeriesMap::identity(g) * alpha == alpha);
    CHECK(alpha * alpha == AffineSeriesMap::alpha_of(g, g->add(a, a)));
  }
  CHECK(AffineSeriesMap::alpha_of(g, 0) == AffineSeriesMap::identity(g));

  auto h1 = pair_over(g, {Pair{1, 2}, Pair{0, 1}}, 2);
  auto h2 = pair_over(g, {Pair{2, 2}}, 1);
  CHECK(AffineSeriesMap::translation(h1) * AffineSeriesMap::translation(h2) ==
        AffineSeriesMap::translation(h1 + h2));

  // mu_gamma on a constant: coefficient 0 is xi(a1, a2)
  auto mu = AffineSeriesMap::multiplication(gamma(g));
  for (Element a1 = 0; a1 < 3; ++a1)
    for (Element a2 = 0; a2 < 3; ++a2) {
      auto out = mu.apply_trunc(std::vector<Pair>{Pair{a1, a2}}, 3);
      CHECK(out[0] == Pair{a1, g->add(a1, a2)});
      CHECK(out == oracle::gamma_apply(*g, {Pair{a1, a2}, Pair{}, Pair{}, Pair{}}));
    }

  CHECK_THROWS_AS(AffineSeriesMap::multiplication(RationalEndoSeries(EndoPoly(g))), NotAUnit);
  CHECK_THROWS_AS(AffineSeriesMap(one(g), pair_over(group({2}), {}, 0)), BaseMismatch);
}

TEST_CASE("conjugating a translation by gamma") {
  for (auto g : {group({2}), group({3}), group({2, 2})}) {
    const std::size_t d = 6;
    const auto mu = TruncatedAffineMap::of(AffineSeriesMap::multiplication(gamma(g)), d);
    for (Element a = 0; a < g->order(); ++a) {
      const auto alpha = TruncatedAffineMap::of(AffineSeriesMap::alpha_of(g, a), d);
      const auto lhs = mu * alpha * mu.inverse();
      const auto rhs = TruncatedAffineMap::of(
          AffineSeriesMap::translation(gamma(g) * pair_over(g, {Pair{a, a}}, 1)), d);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("truncated affine maps form a group") {
  auto g = group({2, 2});
  sampling::Rng rng(11);
  const std::size_t d = 5;
  for (int trial = 0; trial < 20; ++trial) {
    auto m = TruncatedAffineMap::of(
        AffineSeriesMap(sampling::unit_series(rng, g, 2, 2), sampling::pair_series(rng, g, 2, 2)), d);
    auto f = sampling::pair_coeffs(rng, *g, d + 1);
    CHECK(m.inverse().apply(m.apply(f)) == f);
    CHECK(m * m.inverse() == TruncatedAffineMap::identity(g, d));
  }
}

TEST_CASE("state maps of TC(A) against gamma f + (a, a) / (1 - t)") {
  auto z2 = group({2});
  auto m2 = twisted_cayley_machine(z2->monoid());
  const Word f{pair_to_letter(*z2, {1, 0}), pair_to_letter(*z2, {0, 0})};
  auto r = verify_state_map(m2, z2, 1, f);
  CHECK(r.ok);
  CHECK(word_to_pairs(*z2, act(m2, 1, f)) == std::vector<Pair>{{0, 0}, {1, 1}});

  for (auto g : {group({2}), group({3})}) {
    auto m = twisted_cayley_machine(g->monoid());
    StateMapChecker checker(m, g, 3);
    for (std::size_t len = 1; len <= 3; ++len) {
      Word w(len, 0);
      while (true) {
        for (Element a = 0; a < g->order(); ++a) {
          CHECK(checker.check(a, w).ok);
          CHECK(pairs_of(*g, act(m, a, w)) == oracle::alpha_gamma(*g, a, pairs_of(*g, w)));
        }
        std::size_t i = len;
        while (i > 0 && ++w[i - 1] == g->pair_count())
          w[--i] = 0;
        if (i == 0)
          break;
      }
    }
  }
}

TEST_CASE("a tampered machine is caught with a coefficient diff") {
  auto g = group({2});
  auto m = twisted_cayley_machine(g->monoid());
  auto out = m.output_table();
  std::swap(out[1 * 4 + 0], out[1 * 4 + 1]);
  MealyMachine tampered(m.state_names(), m.letter_names(), out, m.transition_table());
  const Word f{0, 0};
  auto r = verify_state_map(tampered, g, 1, f);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.diff.empty());
}

TEST_CASE("sampled conjugation identities") {
  for (auto g : {group({2}), group({3}), group({2, 2})}) {
    sampling::Rng rng(5);
    for (int trial = 0; trial < 15; ++trial) {
      auto gs = sampling::unit_series(rng, g, 3, 2);
      auto hs = sampling::pair_series(rng, g, 3, 2);
      auto f = sampling::pair_coeffs(rng, *g, 9);
      CHECK(verify_conjugation(gs, hs, f, 8).ok);
    }
  }
}

TEST_CASE("letter and pair conversions") {
  auto g = group({3});
  for (Letter l = 0; l < 9; ++l)
    CHECK(pair_to_letter(*g, letter_to_pair(*g, l)) == l);
  const Word w{0, 4, 8, 5};
  CHECK(pairs_to_word(*g, word_to_pairs(*g, w)) == w);
  CHECK(render_coeffs(std::vector<Pair>{{1, 2}, {0, 0}}) == "[(1,2) (0,0)]");
}
