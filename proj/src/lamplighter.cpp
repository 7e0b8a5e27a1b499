#include "tcm/lamplighter.hpp"

#include <charconv>
#include <set>

namespace tcm {

LamplighterElement::LamplighterElement(GroupPtr base, LampConfig lamps, std::int64_t shift)
    : base_(std::move(base)), shift_(shift) {
  for (const auto &[pos, value] : lamps) {
    if (value >= base_->order())
      throw FormatError("lamp value out of range");
    if (value != base_->zero())
      lamps_.emplace(pos, value);
  }
}

LamplighterElement LamplighterElement::shift_generator(GroupPtr base) {
  return LamplighterElement(std::move(base), {}, 1);
}

LamplighterElement LamplighterElement::lamp(GroupPtr base, Element a, std::int64_t position) {
  return LamplighterElement(std::move(base), {{position, a}}, 0);
}

LamplighterElement LamplighterElement::inverse() const {
  // (l, n)^-1 = (-(l shifted by -n), -n)
  LampConfig lamps;
  for (const auto &[pos, value] : lamps_)
    lamps.emplace(pos - shift_, base_->neg(value));
  return LamplighterElement(base_, std::move(lamps), -shift_);
}

LamplighterElement operator*(const LamplighterElement &x, const LamplighterElement &y) {
  if (!same_base(x.base_, y.base_))
    throw BaseMismatch();
  LamplighterElement out = x;
  for (const auto &[pos, value] : y.lamps_) {
    const std::int64_t p = pos + x.shift_;
    auto it = out.lamps_.find(p);
    if (it == out.lamps_.end()) {
      out.lamps_.emplace(p, value);
    } else {
      it->second = x.base_->add(it->second, value);
      if (it->second == x.base_->zero())
        out.lamps_.erase(it);
    }
  }
  out.shift_ += y.shift_;
  return out;
}

std::string LamplighterElement::to_string() const {
  std::string out;
  for (const auto &[pos, value] : lamps_) {
    if (!out.empty())
      out += ',';
    out += std::to_string(pos) + ":" + std::to_string(value);
  }
  return out + "@shift=" + std::to_string(shift_);
}

LamplighterElement generator_image(const GroupPtr &base, StateLetter g) {
  auto tau = LamplighterElement::lamp(base, g.state) * LamplighterElement::shift_generator(base);
  return g.exponent < 0 ? tau.inverse() : tau;
}

LamplighterElement word_to_lamplighter(const GroupPtr &base, const GeneratorWord &w) {
  auto acc = LamplighterElement::identity(base);
  for (const auto &g : w)
    acc = acc * generator_image(base, g);
  return acc;
}

namespace {

void require_nonnegative(const LampConfig &lamps) {
  for (const auto &[pos, value] : lamps)
    if (pos < 0)
      throw NegativePosition(pos);
}

} // namespace

RationalPairSeries phi_h_of_lampconfig(const GroupPtr &base, const LampConfig &lamps) {
  require_nonnegative(lamps);
  const auto g = gamma(base);
  RationalPairSeries h{PairPoly(base)};
  for (const auto &[pos, value] : lamps) {
    if (value == base->zero())
      continue;
    const RationalPairSeries lamp(PairPoly::constant(base, Pair{value, value}), 1);
    h = h + pow(g, static_cast<unsigned>(pos)) * lamp;
  }
  return h;
}

bool kernel_test(const GroupPtr &base, const LampConfig &lamps) {
  return phi_h_of_lampconfig(base, lamps).is_zero();
}

Pair leading_lamp_recovery(const GroupPtr &base, const LampConfig &lamps) {
  require_nonnegative(lamps);
  LampConfig nonzero;
  for (const auto &[pos, value] : lamps)
    if (value != base->zero())
      nonzero.emplace(pos, value);
  if (nonzero.empty())
    throw EmptyConfig();

  // sum_j (1 - t)^(top - i_j) (xi + (zeta - xi) t)^(i_j) (a_j, a_j)
  const auto top = static_cast<unsigned>(nonzero.rbegin()->first);
  const Endo xi = endo_xi(base);
  const EndoPoly numerator_of_gamma(base, {xi, endo_zeta(base) - xi});
  PairPoly cleared(base);
  for (const auto &[pos, value] : nonzero) {
    EndoPoly power = EndoPoly::constant(base, Endo::identity(base));
    for (std::int64_t i = 0; i < pos; ++i)
      power = power * numerator_of_gamma;
    const PairPoly term = power * PairPoly::constant(base, Pair{value, value});
    cleared = cleared + term.times_one_minus_t(top - static_cast<unsigned>(pos));
  }
  return cleared.eval_at_one();
}

LampConfig normalize_window(const LampConfig &lamps) {
  if (lamps.empty())
    return lamps;
  const std::int64_t low = lamps.begin()->first;
  LampConfig out;
  for (const auto &[pos, value] : lamps)
    out.emplace(pos - low, value);
  return out;
}

std::vector<LampConfig> window_configs(const FiniteAbelianGroup &g, std::size_t window) {
  const std::size_t slots = window + 1;
  std::vector<Element> digits(slots, 0);
  std::vector<LampConfig> out;
  while (true) {
    LampConfig config;
    for (std::size_t i = 0; i < slots; ++i)
      if (digits[i] != 0)
        config.emplace(static_cast<std::int64_t>(i), digits[i]);
    out.push_back(std::move(config));
    std::size_t i = 0;
    while (i < slots && ++digits[i] == g.order())
      digits[i++] = 0;
    if (i == slots)
      break;
  }
  return out;
}

TruncatedAffineMap to_truncated_affine(const LamplighterElement &x, std::size_t depth) {
  const auto &base = x.base();
  const auto gamma_fwd = gamma(base).expand(depth);
  const auto gamma_inv = unit_inverse_trunc(base, gamma_fwd, depth);

  auto gamma_power = [&](std::int64_t n) {
    std::vector<Endo> acc{Endo::identity(base)};
    const auto &step = n < 0 ? gamma_inv : gamma_fwd;
    for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i)
      acc = trunc_mul(base, acc, step, depth);
    acc.resize(depth + 1, Endo::zero(base));
    return acc;
  };

  std::vector<Pair> h(depth + 1);
  for (const auto &[pos, value] : x.lamps()) {
    const auto lamp = PairPoly::constant(base, Pair{value, value}).expand(depth, 1);
    h = trunc_add(base, h, trunc_apply(base, gamma_power(pos), lamp, depth), depth);
  }
  return TruncatedAffineMap(base, depth, gamma_power(x.shift()), std::move(h));
}

std::vector<std::uint64_t> lamplighter_sphere_sizes(const GroupPtr &base, std::size_t radius) {
  std::vector<LamplighterElement> generators;
  for (Element a = 0; a < base->order(); ++a) {
    generators.push_back(generator_image(base, {a, 1}));
    generators.push_back(generator_image(base, {a, -1}));
  }
  std::set<LamplighterElement> seen{LamplighterElement::identity(base)};
  std::vector<LamplighterElement> frontier{LamplighterElement::identity(base)};
  std::vector<std::uint64_t> sizes{1};
  for (std::size_t r = 1; r <= radius; ++r) {
    std::vector<LamplighterElement> next;
    for (const auto &x : frontier) {
      for (const auto &g : generators) {
        auto y = g * x;
        if (seen.insert(y).second)
          next.push_back(std::move(y));
      }
    }
    sizes.push_back(next.size());
    frontier = std::move(next);
  }
  return sizes;
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw FormatError("bad lamp literal '" + std::string(whole) + "'");
  return value;
}

} // namespace

LamplighterElement parse_lamp_literal(const GroupPtr &base, std::string_view text) {
  std::string_view lamps_part = text;
  std::int64_t shift = 0;
  if (auto at = text.find('@'); at != std::string_view::npos) {
    lamps_part = text.substr(0, at);
    auto rest = text.substr(at + 1);
    constexpr std::string_view key = "shift=";
    if (rest.substr(0, key.size()) != key)
      throw FormatError("bad lamp literal '" + std::string(text) + "'");
    shift = parse_int(rest.substr(key.size()), text);
  }
  LampConfig lamps;
  while (!lamps_part.empty()) {
    auto comma = lamps_part.find(',');
    auto item = lamps_part.substr(0, comma);
    auto colon = item.find(':');
    if (colon == std::string_view::npos)
      throw FormatError("bad lamp literal '" + std::string(text) + "'");
    const auto pos = parse_int(item.substr(0, colon), text);
    const auto value = parse_int(item.substr(colon + 1), text);
    if (value < 0 || static_cast<std::uint64_t>(value) >= base->order())
      throw FormatError("lamp value out of range in '" + std::string(text) + "'");
    if (!lamps.emplace(pos, static_cast<Element>(value)).second)
      throw FormatError("repeated lamp position in '" + std::string(text) + "'");
    lamps_part = comma == std::string_view::npos ? std::string_view{} : lamps_part.substr(comma + 1);
  }
  return LamplighterElement(base, std::move(lamps), shift);
}

} // namespace tcm
