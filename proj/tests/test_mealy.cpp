#include <doctest.h>

#include <random>
#include <set>

#include "corpus.hpp"
#include "dot_parser.hpp"
#include "tcm/mealy.hpp"

using namespace tcm;

namespace {

MealyMachine identity_machine(std::size_t letters) {
  std::vector<std::string> names;
  std::vector<Letter> out;
  for (std::size_t l = 0; l < letters; ++l) {
    names.push_back("x" + std::to_string(l));
    out.push_back(static_cast<Letter>(l));
  }
  return MealyMachine({"id"}, names, out, std::vector<State>(letters, 0));
}

MealyMachine tc(std::vector<std::uint32_t> factors) {
  return twisted_cayley_machine(make_cyclic_product(std::move(factors))->monoid());
}

Letter pair_letter(Element b, Element c, std::size_t n) { return static_cast<Letter>(b * n + c); }

std::vector<Word> all_words(std::size_t alphabet, std::size_t length) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<Word> next;
    for (const auto &w : out)
      for (Letter l = 0; l < alphabet; ++l) {
        auto v = w;
        v.push_back(l);
        next.push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

} // namespace

TEST_CASE("machine validation") {
  CHECK_THROWS_AS(MealyMachine({}, {"a"}, {}, {}), InvalidMachine);
  CHECK_THROWS_AS(MealyMachine({"q"}, {"a", "a"}, {0, 1}, {0, 0}), InvalidMachine);
  CHECK_THROWS_AS(MealyMachine({"q"}, {"a", "b"}, {0}, {0, 0}), InvalidMachine);
  CHECK_THROWS_AS(MealyMachine({"q"}, {"a", "b"}, {0, 2}, {0, 0}), InvalidMachine);
  CHECK_THROWS_AS(MealyMachine({"q"}, {"a", "b"}, {0, 1}, {0, 1}), InvalidMachine);
}

TEST_CASE("predicates on small fixtures") {
  auto id = identity_machine(3);
  CHECK(is_invertible(id));
  CHECK(is_reversible(id));
  CHECK(is_bireversible(id));

  // constant output row
  MealyMachine constant({"q"}, {"a", "b"}, {0, 0}, {0, 0});
  CHECK_FALSE(is_invertible(constant));

  // transition ignores the state
  MealyMachine forgetful({"p", "q"}, {"a", "b"}, {0, 1, 1, 0}, {0, 0, 0, 0});
  CHECK(is_invertible(forgetful));
  CHECK_FALSE(is_reversible(forgetful));
  CHECK_FALSE(is_bireversible(forgetful));

  // invertible and reversible, but (q, l) -> (out, next) is not injective
  MealyMachine squeezed({"p", "q"}, {"a", "b"}, {0, 1, 1, 0}, {0, 1, 1, 0});
  CHECK(is_invertible(squeezed));
  CHECK(is_reversible(squeezed));
  CHECK_FALSE(is_bireversible(squeezed));
}

TEST_CASE("Cayley machines of groups are invertible and reversible but never bireversible") {
  auto z2 = make_cyclic_product({2})->monoid();
  auto c = cayley_machine(z2);
  CHECK(c.output(1, 1) == 0);
  CHECK(c.next(1, 1) == 0);
  CHECK(is_invertible(c));
  CHECK(is_reversible(c));
  CHECK_FALSE(is_bireversible(c));

  auto trivial = cayley_machine(FiniteMonoid::from_table({{0}}, 0));
  CHECK(trivial.num_states() == 1);
  CHECK(trivial.num_letters() == 1);
  CHECK(is_bireversible(trivial));
}

TEST_CASE("twisted Cayley machine tables") {
  auto m = tc({2});
  CHECK(m.num_states() == 2);
  CHECK(m.num_letters() == 4);
  CHECK(m.letter_names()[3] == "(1,1)");
  CHECK(m.output(1, pair_letter(1, 1, 2)) == pair_letter(0, 1, 2));
  CHECK(m.next(1, pair_letter(1, 1, 2)) == 0);
  for (Element b = 0; b < 2; ++b)
    for (Element c = 0; c < 2; ++c) {
      CHECK(m.output(0, pair_letter(b, c, 2)) == pair_letter(b, (b + c) % 2, 2));
      CHECK(m.next(0, pair_letter(b, c, 2)) == c);
    }
  // state 0 is not the identity map
  CHECK(m.output(0, pair_letter(1, 0, 2)) != pair_letter(1, 0, 2));

  for (const auto &entry : corpus::groups_up_to_8()) {
    CAPTURE(entry.name);
    auto g = FiniteMonoid::from_table(entry.table);
    auto t = twisted_cayley_machine(g);
    CHECK(t.num_states() == g.size());
    CHECK(t.num_letters() == g.size() * g.size());
    CHECK(is_bireversible(t));
  }
}

TEST_CASE("twisted machine of a monoid that is not a group") {
  auto m = twisted_cayley_machine(FiniteMonoid::from_table({{0, 1}, {1, 1}}, 0));
  CHECK(m.num_letters() == 4);
  CHECK_FALSE(is_invertible(m));
  CHECK_THROWS_AS(inverse_machine(m), NotInvertible);
}

TEST_CASE("inverse machine of TC(G) has output (b, c) -> (a^-1 b, b^-1 c)") {
  for (const auto &entry : corpus::groups_up_to_8()) {
    CAPTURE(entry.name);
    auto g = FiniteMonoid::from_table(entry.table);
    auto t = twisted_cayley_machine(g);
    auto inv = inverse_machine(t);
    const auto n = g.size();
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) {
          const Element b2 = g.mul(g.inverse(a), b);
          const Element c2 = g.mul(g.inverse(b), c);
          CHECK(inv.output(a, pair_letter(b, c, n)) == pair_letter(b2, c2, n));
        }
  }
  auto id = identity_machine(2);
  CHECK(inverse_machine(id) == id);
}

TEST_CASE("inverse machine undoes the action on words") {
  auto m = tc({2});
  auto inv = inverse_machine(m);
  for (State q = 0; q < 2; ++q)
    for (const auto &w : all_words(4, 4)) {
      CHECK(act(inv, q, act(m, q, w)) == w);
      CHECK(act(m, q, act(inv, q, w)) == w);
    }
}

TEST_CASE("dual machine") {
  auto id = identity_machine(2);
  auto d = dual_machine(id);
  CHECK(d.num_states() == 2);
  CHECK(d.num_letters() == 1);
  CHECK(dual_machine(d) == id);

  auto t = tc({2});
  auto dt = dual_machine(t);
  CHECK(is_invertible(dt));
  CHECK(is_reversible(dt));
  CHECK(dual_machine(dt) == t);
}

TEST_CASE("act evaluates the tables letter by letter") {
  auto m = tc({2});
  const Word w{pair_letter(1, 0, 2), pair_letter(0, 0, 2)};
  CHECK(act(m, 1, w) == Word{pair_letter(0, 0, 2), pair_letter(1, 1, 2)});
  CHECK(act(m, 0, w) == Word{pair_letter(1, 1, 2), pair_letter(0, 0, 2)});
  CHECK(act(m, 0, Word{}).empty());
}

TEST_CASE("act_word composes right to left") {
  auto m = tc({2});
  const Word w{pair_letter(0, 0, 2)};
  CHECK(act_word(m, {{1, 1}, {0, 1}}, w) == Word{pair_letter(1, 1, 2)});
  CHECK(act_word(m, {}, w) == w);

  auto t = tc({3});
  for (State q = 0; q < 3; ++q) {
    std::mt19937_64 rng(q);
    for (int trial = 0; trial < 40; ++trial) {
      Word v(1 + rng() % 6);
      for (auto &l : v)
        l = static_cast<Letter>(rng() % 9);
      CHECK(act_word(t, {{q, 1}, {q, -1}}, v) == v);
      CHECK(act_word(t, {{q, -1}, {q, 1}}, v) == v);
      CHECK(act_word(t, {{1, 1}, {q, 1}}, v) == act(t, 1, act(t, q, v)));
    }
  }
}

TEST_CASE("portraits") {
  auto m = tc({2});
  CHECK(word_count(4, 8, kDefaultPortraitCap) == 65536);
  CHECK_THROWS_AS(word_count(4, 9, kDefaultPortraitCap), DepthTooLarge);
  CHECK_THROWS_AS(portrait(m, {}, 9), DepthTooLarge);

  auto e = portrait(m, {}, 3);
  CHECK(e.is_identity());
  CHECK(e.separating_depth() == 0);
  CHECK(portrait(m, {{1, 1}, {1, -1}}, 3) == e);

  auto p0 = portrait(m, {{0, 1}}, 1), p1 = portrait(m, {{1, 1}}, 1);
  CHECK_FALSE(p0 == p1);
  CHECK(p0.separating_depth() == 1);

  // word indices put the first letter most significant
  auto p = portrait(m, {{1, 1}}, 2);
  const Word w{pair_letter(1, 0, 2), pair_letter(0, 0, 2)};
  const Word image = act(m, 1, w);
  CHECK(p.images()[w[0] * 4 + w[1]] == image[0] * 4 + image[1]);
}

TEST_CASE("portrait tables agree with direct evaluation") {
  for (auto factors : {std::vector<std::uint32_t>{2}, std::vector<std::uint32_t>{3}}) {
    auto m = tc(factors);
    const std::size_t depth = factors[0] == 2 ? 4 : 3;
    PortraitTables tables(m, depth);
    CHECK(tables.identity() == portrait(m, {}, depth));
    const std::vector<StateWord> words{
        {{0, 1}}, {{1, -1}}, {{0, 1}, {1, 1}}, {{1, 1}, {0, 1}}, {{1, -1}, {0, 1}, {1, 1}}};
    for (const auto &sw : words) {
      const auto a = tables.of(sw), b = portrait(m, sw, depth);
      CHECK(a == b);
      CHECK(a.fingerprint() == b.fingerprint());
    }
    auto images = tables.identity().images();
    tables.apply_left({1, 1}, images);
    tables.apply_left({0, -1}, images);
    CHECK(images == portrait(m, {{0, -1}, {1, 1}}, depth).images());
  }
}

TEST_CASE("commutation of state maps in TC(Z/2)") {
  auto m = tc({2});
  const auto ab = portrait(m, {{0, 1}, {1, 1}}, 6);
  const auto ba = portrait(m, {{1, 1}, {0, 1}}, 6);
  // tau_0 tau_1 and tau_1 tau_0 differ as lamplighter elements
  CHECK_FALSE(ab == ba);
  CHECK(ab.fingerprint() != ba.fingerprint());
}

TEST_CASE("DOT rendering") {
  auto t = tc({2});
  auto g = dot::parse(to_dot(t));
  CHECK(g.name == "mealy");
  CHECK(g.nodes.size() == 2);
  CHECK(g.edges.size() == 8);
  std::set<std::string> labels;
  for (const auto &e : g.edges)
    labels.insert(e.attrs.at("label"));
  CHECK(labels.size() == 8);
  CHECK(labels.count("(1,1) | (0,1)") == 1);

  auto id = dot::parse(to_dot(identity_machine(3)));
  CHECK(id.nodes.size() == 1);
  CHECK(id.edges.size() == 3);
  for (const auto &e : id.edges)
    CHECK(e.from == e.to);

  MealyMachine quoted({"say \"hi\""}, {"a\\b"}, {0}, {0});
  auto q = dot::parse(to_dot(quoted));
  CHECK(q.nodes.begin()->second.at("label") == "say \"hi\"");
}
