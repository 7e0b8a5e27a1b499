#pragma once

// Reference computations that avoid the library's rational-series and
// lamplighter code paths: plain coefficient loops, binomial expansions and a
// from-scratch wreath product.

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "tcm/algebra.hpp"

namespace oracle {

using tcm::Element;
using tcm::FiniteAbelianGroup;
using tcm::Pair;
using Series = std::vector<Pair>;

inline Pair xi(const FiniteAbelianGroup &g, Pair p) { return {p.first, g.add(p.first, p.second)}; }
inline Pair zeta(const FiniteAbelianGroup &, Pair p) { return {p.second, p.second}; }

/// gamma * s = xi s_n + sum_{j < n} zeta s_j, coefficientwise.
inline Series gamma_apply(const FiniteAbelianGroup &g, const Series &s) {
  Series out(s.size());
  Pair tail{};
  for (std::size_t n = 0; n < s.size(); ++n) {
    out[n] = g.pair_add(xi(g, s[n]), tail);
    tail = g.pair_add(tail, zeta(g, s[n]));
  }
  return out;
}

/// (alpha_a o mu_gamma)(f), truncated to |f| coefficients.
inline Series alpha_gamma(const FiniteAbelianGroup &g, Element a, const Series &f) {
  Series out = gamma_apply(g, f);
  for (auto &c : out)
    c = g.pair_add(c, Pair{a, a});
  return out;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k)
    return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

/// Coefficient n of p / (1 - t)^k is sum_i p_i C(n - i + k - 1, k - 1).
template <typename Coeff, typename Add, typename Times>
std::vector<Coeff> binomial_expand(const std::vector<Coeff> &p, unsigned k, std::size_t depth,
                                   Coeff zero, Add add, Times times) {
  std::vector<Coeff> out(depth + 1, zero);
  for (std::size_t n = 0; n <= depth; ++n)
    for (std::size_t i = 0; i < p.size() && i <= n; ++i) {
      const std::int64_t c =
          k == 0 ? (n == i ? 1 : 0) : binomial(static_cast<std::int64_t>(n - i + k - 1), k - 1);
      out[n] = add(out[n], times(p[i], c));
    }
  return out;
}

/// sum over lamps of gamma^i (a, a) / (1 - t), truncated.
inline Series kernel_series(const FiniteAbelianGroup &g, const std::map<std::int64_t, Element> &lamps,
                            std::size_t depth) {
  Series total(depth + 1);
  for (const auto &[pos, a] : lamps) {
    Series s(depth + 1, Pair{a, a});
    for (std::int64_t i = 0; i < pos; ++i)
      s = gamma_apply(g, s);
    for (std::size_t n = 0; n <= depth; ++n)
      total[n] = g.pair_add(total[n], s[n]);
  }
  return total;
}

/// Wreath product element with lamps stored as a sorted vector of
/// (position, value) and no zero values.
struct Wreath {
  std::vector<std::pair<std::int64_t, Element>> lamps;
  std::int64_t shift = 0;
  auto operator<=>(const Wreath &) const = default;
};

inline Wreath wreath_mul(const FiniteAbelianGroup &g, const Wreath &x, const Wreath &y) {
  std::map<std::int64_t, Element> acc(x.lamps.begin(), x.lamps.end());
  for (const auto &[pos, v] : y.lamps) {
    auto &slot = acc[pos + x.shift];
    slot = g.add(slot, v);
  }
  Wreath z;
  z.shift = x.shift + y.shift;
  for (const auto &[pos, v] : acc)
    if (v != 0)
      z.lamps.emplace_back(pos, v);
  return z;
}

/// tau_a = (a at 0) s and its inverse (-a at -1) s^-1.
inline std::vector<Wreath> wreath_generators(const FiniteAbelianGroup &g) {
  std::vector<Wreath> gens;
  for (Element a = 0; a < g.order(); ++a) {
    Wreath t, ti;
    t.shift = 1;
    ti.shift = -1;
    if (a != 0) {
      t.lamps.emplace_back(0, a);
      ti.lamps.emplace_back(-1, g.neg(a));
    }
    gens.push_back(t);
    gens.push_back(ti);
  }
  return gens;
}

inline std::vector<std::uint64_t> wreath_sphere_sizes(const FiniteAbelianGroup &g, std::size_t radius) {
  const auto gens = wreath_generators(g);
  std::set<Wreath> seen{Wreath{}};
  std::vector<Wreath> frontier{Wreath{}};
  std::vector<std::uint64_t> sizes{1};
  for (std::size_t r = 1; r <= radius; ++r) {
    std::vector<Wreath> next;
    for (const auto &x : frontier)
      for (const auto &s : gens) {
        Wreath y = wreath_mul(g, x, s);
        if (seen.insert(y).second)
          next.push_back(std::move(y));
      }
    sizes.push_back(next.size());
    frontier = std::move(next);
  }
  return sizes;
}

} // namespace oracle
