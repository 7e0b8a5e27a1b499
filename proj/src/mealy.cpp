#include "tcm/mealy.hpp"

#include <optional>
#include <set>
#include <sstream>

namespace tcm {

namespace {

bool duplicate_free(const std::vector<std::string> &names) {
  return std::set<std::string>(names.begin(), names.end()).size() == names.size();
}

std::string escape_dot(const std::string &s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

// Built on first use by act_word.
struct InverseCache {
  std::optional<MealyMachine> machine;

  const MealyMachine &get(const MealyMachine &m) {
    if (!machine)
      machine = inverse_machine(m);
    return *machine;
  }
};

std::vector<Letter> decode(std::uint32_t index, std::size_t alphabet, std::size_t depth) {
  std::vector<Letter> w(depth);
  for (std::size_t i = depth; i-- > 0;) {
    w[i] = index % alphabet;
    index /= static_cast<std::uint32_t>(alphabet);
  }
  return w;
}

std::uint32_t encode(std::span<const Letter> w, std::size_t alphabet) {
  std::uint32_t index = 0;
  for (Letter l : w)
    index = index * static_cast<std::uint32_t>(alphabet) + l;
  return index;
}

std::vector<std::uint32_t> generator_table(const MealyMachine &m, State q, std::size_t depth,
                                           std::size_t size) {
  std::vector<std::uint32_t> table(size);
  const auto alphabet = static_cast<std::uint32_t>(m.num_letters());
  for (std::uint32_t w = 0; w < size; ++w) {
    // walk the word from its most significant letter
    std::uint32_t rest = w;
    std::uint32_t weight = static_cast<std::uint32_t>(size);
    std::uint32_t image = 0;
    State s = q;
    for (std::size_t i = 0; i < depth; ++i) {
      weight /= alphabet;
      const Letter l = rest / weight;
      rest %= weight;
      image = image * alphabet + m.output(s, l);
      s = m.next(s, l);
    }
    table[w] = image;
  }
  return table;
}

} // namespace

MealyMachine::MealyMachine(std::vector<std::string> state_names,
                           std::vector<std::string> letter_names, std::vector<Letter> output,
                           std::vector<State> transition)
    : state_names_(std::move(state_names)), letter_names_(std::move(letter_names)),
      output_(std::move(output)), transition_(std::move(transition)) {
  if (state_names_.empty() || letter_names_.empty())
    throw InvalidMachine("a machine needs at least one state and one letter");
  if (!duplicate_free(state_names_))
    throw InvalidMachine("duplicate state name");
  if (!duplicate_free(letter_names_))
    throw InvalidMachine("duplicate letter name");
  const std::size_t cells = num_states() * num_letters();
  if (output_.size() != cells || transition_.size() != cells)
    throw InvalidMachine("table size does not match |Q| x |L|");
  for (auto l : output_)
    if (l >= num_letters())
      throw InvalidMachine("output letter out of range");
  for (auto q : transition_)
    if (q >= num_states())
      throw InvalidMachine("transition state out of range");
}

bool is_invertible(const MealyMachine &m) {
  for (State q = 0; q < m.num_states(); ++q) {
    std::vector<bool> hit(m.num_letters(), false);
    for (Letter l = 0; l < m.num_letters(); ++l) {
      if (hit[m.output(q, l)])
        return false;
      hit[m.output(q, l)] = true;
    }
  }
  return true;
}

bool is_reversible(const MealyMachine &m) {
  for (Letter l = 0; l < m.num_letters(); ++l) {
    std::vector<bool> hit(m.num_states(), false);
    for (State q = 0; q < m.num_states(); ++q) {
      if (hit[m.next(q, l)])
        return false;
      hit[m.next(q, l)] = true;
    }
  }
  return true;
}

bool is_bireversible(const MealyMachine &m) {
  if (!is_invertible(m) || !is_reversible(m))
    return false;
  std::vector<bool> hit(m.num_states() * m.num_letters(), false);
  for (State q = 0; q < m.num_states(); ++q) {
    for (Letter l = 0; l < m.num_letters(); ++l) {
      const std::size_t image = m.output(q, l) * m.num_states() + m.next(q, l);
      if (hit[image])
        return false;
      hit[image] = true;
    }
  }
  return true;
}

MealyMachine cayley_machine(const FiniteMonoid &monoid) {
  const std::size_t n = monoid.size();
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i)
    names[i] = std::to_string(i);
  std::vector<Letter> table(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      table[x * n + y] = monoid.mul(x, y);
  return MealyMachine(names, names, table, table);
}

MealyMachine twisted_cayley_machine(const FiniteMonoid &monoid) {
  const std::size_t n = monoid.size();
  std::vector<std::string> states(n);
  std::vector<std::string> letters(n * n);
  for (std::size_t i = 0; i < n; ++i)
    states[i] = std::to_string(i);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c)
      letters[b * n + c] = "(" + states[b] + "," + states[c] + ")";

  std::vector<Letter> output(n * n * n);
  std::vector<State> transition(n * n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        const Element ab = monoid.mul(a, b);
        const std::size_t cell = a * n * n + b * n + c;
        output[cell] = ab * static_cast<Letter>(n) + monoid.mul(ab, c);
        transition[cell] = monoid.mul(a, c);
      }
    }
  }
  return MealyMachine(std::move(states), std::move(letters), std::move(output),
                      std::move(transition));
}

MealyMachine inverse_machine(const MealyMachine &m) {
  if (!is_invertible(m))
    throw NotInvertible("machine has a non-bijective output row");
  const std::size_t nq = m.num_states(), nl = m.num_letters();
  std::vector<Letter> output(nq * nl);
  std::vector<State> transition(nq * nl);
  for (State q = 0; q < nq; ++q) {
    for (Letter l = 0; l < nl; ++l) {
      const Letter image = m.output(q, l);
      output[q * nl + image] = l;
      transition[q * nl + image] = m.next(q, l);
    }
  }
  return MealyMachine(m.state_names(), m.letter_names(), std::move(output),
                      std::move(transition));
}

MealyMachine dual_machine(const MealyMachine &m) {
  const std::size_t nq = m.num_states(), nl = m.num_letters();
  std::vector<Letter> output(nl * nq);
  std::vector<State> transition(nl * nq);
  for (Letter l = 0; l < nl; ++l) {
    for (State q = 0; q < nq; ++q) {
      output[l * nq + q] = m.next(q, l);
      transition[l * nq + q] = m.output(q, l);
    }
  }
  return MealyMachine(m.letter_names(), m.state_names(), std::move(output),
                      std::move(transition));
}

Word act(const MealyMachine &m, State q, std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    out.push_back(m.output(q, l));
    q = m.next(q, l);
  }
  return out;
}

Word act_word(const MealyMachine &m, const StateWord &sw, std::span<const Letter> w) {
  InverseCache inverse;
  Word current(w.begin(), w.end());
  for (auto it = sw.rbegin(); it != sw.rend(); ++it) {
    const MealyMachine &machine = it->exponent < 0 ? inverse.get(m) : m;
    current = act(machine, it->state, current);
  }
  return current;
}

// Portrait

std::uint64_t Portrait::fingerprint() const {
  // word-wise FNV-1a with a splitmix64 finalizer
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) { h = (h ^ v) * 1099511628211ull; };
  mix(depth_);
  mix(alphabet_);
  for (auto v : images_)
    mix(v);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebull;
  h ^= h >> 31;
  return h;
}

bool Portrait::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::size_t Portrait::separating_depth() const {
  std::size_t best = 0;
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == i)
      continue;
    // first differing letter, counting from the most significant one
    std::uint32_t a = i, b = images_[i];
    std::size_t last_diff = 0;
    for (std::size_t pos = depth_; pos-- > 0;) {
      if (a % alphabet_ != b % alphabet_)
        last_diff = pos;
      a /= static_cast<std::uint32_t>(alphabet_);
      b /= static_cast<std::uint32_t>(alphabet_);
    }
    const std::size_t k = last_diff + 1;
    if (best == 0 || k < best)
      best = k;
    if (best == 1)
      break;
  }
  return best;
}

std::uint64_t word_count(std::size_t alphabet, std::size_t depth, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < depth; ++i) {
    count *= alphabet;
    if (count > cap)
      throw DepthTooLarge(std::to_string(alphabet) + "^" + std::to_string(depth) +
                          " words exceeds the cap of " + std::to_string(cap));
  }
  return count;
}

Portrait portrait(const MealyMachine &m, const StateWord &sw, std::size_t depth,
                  std::uint64_t cap) {
  const std::size_t alphabet = m.num_letters();
  const auto size = word_count(alphabet, depth, cap);
  std::optional<MealyMachine> inverse;
  for (const auto &g : sw)
    if (g.exponent < 0 && !inverse)
      inverse = inverse_machine(m);

  std::vector<std::uint32_t> images(size);
  for (std::uint32_t w = 0; w < size; ++w) {
    Word current = decode(w, alphabet, depth);
    for (auto it = sw.rbegin(); it != sw.rend(); ++it)
      current = act(it->exponent < 0 ? *inverse : m, it->state, current);
    images[w] = encode(current, alphabet);
  }
  return Portrait(depth, alphabet, std::move(images));
}

// PortraitTables

PortraitTables::PortraitTables(const MealyMachine &m, std::size_t depth, std::uint64_t cap)
    : depth_(depth), alphabet_(m.num_letters()),
      size_(static_cast<std::size_t>(word_count(m.num_letters(), depth, cap))) {
  const MealyMachine inverse = inverse_machine(m);
  for (State q = 0; q < m.num_states(); ++q) {
    forward_.push_back(generator_table(m, q, depth_, size_));
    backward_.push_back(generator_table(inverse, q, depth_, size_));
  }
}

const std::vector<std::uint32_t> &PortraitTables::table(StateLetter g) const {
  return g.exponent < 0 ? backward_.at(g.state) : forward_.at(g.state);
}

void PortraitTables::apply_left(StateLetter g, std::vector<std::uint32_t> &images) const {
  const auto &t = table(g);
  for (auto &v : images)
    v = t[v];
}

Portrait PortraitTables::identity() const {
  std::vector<std::uint32_t> images(size_);
  for (std::uint32_t i = 0; i < size_; ++i)
    images[i] = i;
  return Portrait(depth_, alphabet_, std::move(images));
}

Portrait PortraitTables::of(const StateWord &sw) const {
  std::vector<std::uint32_t> images = identity().images();
  for (auto it = sw.rbegin(); it != sw.rend(); ++it)
    apply_left(*it, images);
  return Portrait(depth_, alphabet_, std::move(images));
}

std::string to_dot(const MealyMachine &m) {
  std::ostringstream out;
  out << "digraph mealy {\n";
  out << "  rankdir=LR;\n";
  for (State q = 0; q < m.num_states(); ++q)
    out << "  s" << q << " [label=\"" << escape_dot(m.state_names()[q]) << "\"];\n";
  for (State q = 0; q < m.num_states(); ++q) {
    for (Letter l = 0; l < m.num_letters(); ++l) {
      out << "  s" << q << " -> s" << m.next(q, l) << " [label=\""
          << escape_dot(m.letter_names()[l]) << " | "
          << escape_dot(m.letter_names()[m.output(q, l)]) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

} // namespace tcm
