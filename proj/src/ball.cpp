#include "tcm/ball.hpp"

#include <unordered_map>

#include "tcm/lamplighter.hpp"

namespace tcm {

std::string to_string(const StateWord &w) {
  if (w.empty())
    return "e";
  std::string out;
  for (const auto &g : w) {
    if (!out.empty())
      out += ' ';
    out += "t" + std::to_string(g.state);
    if (g.exponent < 0)
      out += "^-1";
  }
  return out;
}

std::vector<std::uint64_t> reduced_word_counts(std::uint64_t generators, std::size_t radius) {
  std::vector<std::uint64_t> counts{1};
  for (std::size_t r = 1; r <= radius; ++r)
    counts.push_back(r == 1 ? generators : counts.back() * (generators - 1));
  return counts;
}

namespace {

struct PortraitClass {
  LamplighterElement element;
  StateWord representative;
  std::size_t min_length;
};

class BallWalker {
public:
  BallWalker(const BallOptions &options, const PortraitTables &tables, BallResult &result)
      : options_(options), tables_(tables), result_(result) {
    for (Element a = 0; a < options.group->order(); ++a) {
      generators_.push_back({a, 1});
      generators_.push_back({a, -1});
    }
  }

  void run() {
    StateWord word;
    auto images = tables_.identity().images();
    visit(word, images, LamplighterElement::identity(options_.group));
  }

  const std::unordered_map<std::uint64_t, PortraitClass> &classes() const { return classes_; }

private:
  void visit(StateWord &word, const std::vector<std::uint32_t> &images,
             const LamplighterElement &element) {
    ++result_.word_counts[word.size()];
    record(word, images, element);
    if (word.size() == options_.radius)
      return;
    std::vector<std::uint32_t> next(images.size());
    for (const auto &g : generators_) {
      // reduced words only: no g directly left of its inverse
      if (!word.empty() && word.front().state == g.state && word.front().exponent == -g.exponent)
        continue;
      const auto &table = tables_.table(g);
      for (std::size_t i = 0; i < images.size(); ++i)
        next[i] = table[images[i]];
      word.insert(word.begin(), g);
      visit(word, next, generator_image(options_.group, g) * element);
      word.erase(word.begin());
    }
  }

  void record(const StateWord &word, const std::vector<std::uint32_t> &images,
              const LamplighterElement &element) {
    const Portrait portrait(tables_.depth(), tables_.alphabet(), images);
    const std::uint64_t hash = portrait.fingerprint();

    auto by_element = element_hash_.find(element);
    if (by_element != element_hash_.end() && by_element->second != hash)
      disagree("same lamplighter element, different portraits", word, element);
    else if (by_element == element_hash_.end())
      element_hash_.emplace(element, hash);

    auto it = classes_.find(hash);
    if (it == classes_.end()) {
      classes_.emplace(hash, PortraitClass{element, word, word.size()});
      if (!portrait.is_identity())
        ++result_.separating_depths[portrait.separating_depth()];
      return;
    }
    auto &cls = it->second;
    cls.min_length = std::min(cls.min_length, word.size());
    if (!(cls.element == element)) {
      // equal digests: confirm against the full tables before reporting
      if (tables_.of(cls.representative) == portrait)
        disagree("same portrait, different lamplighter elements (" + to_string(cls.representative) +
                     ")",
                 word, element);
      else
        throw Error("portrait digest collision at " + to_string(word));
    }
  }

  void disagree(const std::string &what, const StateWord &word, const LamplighterElement &x) {
    if (result_.disagreements++ == 0)
      result_.first_disagreement = what + ": " + to_string(word) + " -> " + x.to_string();
  }

  const BallOptions &options_;
  const PortraitTables &tables_;
  BallResult &result_;
  std::vector<StateLetter> generators_;
  std::unordered_map<std::uint64_t, PortraitClass> classes_;
  std::map<LamplighterElement, std::uint64_t> element_hash_;
};

} // namespace

BallResult run_ball(const BallOptions &options) {
  const auto &g = *options.group;
  BallResult result;
  result.radius = options.radius;
  result.depth = options.depth;

  const auto expected = reduced_word_counts(2 * g.order(), options.radius);
  std::uint64_t total = 0;
  for (auto c : expected) {
    total += c;
    if (total > options.word_cap)
      throw CapExceeded("ball of radius " + std::to_string(options.radius) + " has more than " +
                        std::to_string(options.word_cap) + " reduced words");
  }

  const MealyMachine machine = twisted_cayley_machine(g.monoid());
  const PortraitTables tables(machine, options.depth, options.portrait_cap);

  result.word_counts.assign(options.radius + 1, 0);
  BallWalker walker(options, tables, result);
  walker.run();

  result.sphere_sizes.assign(options.radius + 1, 0);
  for (const auto &[hash, cls] : walker.classes())
    ++result.sphere_sizes[cls.min_length];
  result.distinct_elements = walker.classes().size();
  result.oracle_sphere_sizes = lamplighter_sphere_sizes(options.group, options.radius);
  return result;
}

} // namespace tcm
