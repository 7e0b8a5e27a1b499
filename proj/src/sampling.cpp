#include "tcm/sampling.hpp"

namespace tcm::sampling {

namespace {

std::vector<Endo> basis(const GroupPtr &base) {
  const auto *g = base.get();
  return {
      Endo::identity(base),
      endo_xi(base),
      endo_zeta(base),
      Endo::from_function(base, [](Pair p) { return Pair{p.second, p.first}; }),
      Endo::from_function(base, [](Pair p) { return Pair{p.first, 0}; }),
      Endo::from_function(base, [g](Pair p) { return Pair{0, g->add(p.first, p.second)}; }),
  };
}

std::vector<Endo> automorphisms(const GroupPtr &base) {
  const auto *g = base.get();
  const Endo xi = endo_xi(base);
  return {
      xi,
      xi.inverse(),
      Endo::from_function(base, [](Pair p) { return Pair{p.second, p.first}; }),
      Endo::scalar(base, -1),
      Endo::from_function(base, [g](Pair p) { return Pair{g->add(p.first, p.second), p.second}; }),
  };
}

} // namespace

std::uint64_t below(Rng &rng, std::uint64_t n) { return rng() % n; }

Element element(Rng &rng, const FiniteAbelianGroup &g) {
  return static_cast<Element>(below(rng, g.order()));
}

Pair pair(Rng &rng, const FiniteAbelianGroup &g) { return {element(rng, g), element(rng, g)}; }

Endo endo(Rng &rng, const GroupPtr &base) {
  const auto b = basis(base);
  Endo acc = Endo::zero(base);
  const auto terms = 1 + below(rng, 3);
  for (std::uint64_t i = 0; i < terms; ++i) {
    Endo term = b[below(rng, b.size())];
    if (below(rng, 2))
      term = term * b[below(rng, b.size())];
    acc = acc + term.times(static_cast<std::int64_t>(below(rng, base->exponent())));
  }
  return acc;
}

Endo automorphism(Rng &rng, const GroupPtr &base) {
  const auto gens = automorphisms(base);
  Endo acc = Endo::identity(base);
  const auto factors = 1 + below(rng, 4);
  for (std::uint64_t i = 0; i < factors; ++i)
    acc = acc * gens[below(rng, gens.size())];
  return acc;
}

RationalEndoSeries unit_series(Rng &rng, const GroupPtr &base, int max_degree, unsigned max_denom) {
  const auto degree = below(rng, static_cast<std::uint64_t>(max_degree) + 1);
  std::vector<Endo> coeffs{automorphism(rng, base)};
  for (std::uint64_t i = 1; i <= degree; ++i)
    coeffs.push_back(endo(rng, base));
  const auto k = static_cast<unsigned>(below(rng, max_denom + 1));
  return RationalEndoSeries(EndoPoly(base, std::move(coeffs)), k);
}

RationalEndoSeries endo_series(Rng &rng, const GroupPtr &base, int max_degree, unsigned max_denom) {
  const auto degree = below(rng, static_cast<std::uint64_t>(max_degree) + 1);
  std::vector<Endo> coeffs;
  for (std::uint64_t i = 0; i <= degree; ++i)
    coeffs.push_back(endo(rng, base));
  const auto k = static_cast<unsigned>(below(rng, max_denom + 1));
  return RationalEndoSeries(EndoPoly(base, std::move(coeffs)), k);
}

RationalPairSeries pair_series(Rng &rng, const GroupPtr &base, int max_degree, unsigned max_denom) {
  const auto degree = below(rng, static_cast<std::uint64_t>(max_degree) + 1);
  auto coeffs = pair_coeffs(rng, *base, degree + 1);
  const auto k = static_cast<unsigned>(below(rng, max_denom + 1));
  return RationalPairSeries(PairPoly(base, std::move(coeffs)), k);
}

std::vector<Pair> pair_coeffs(Rng &rng, const FiniteAbelianGroup &g, std::size_t length) {
  std::vector<Pair> out(length);
  for (auto &p : out)
    p = pair(rng, g);
  return out;
}

} // namespace tcm::sampling
