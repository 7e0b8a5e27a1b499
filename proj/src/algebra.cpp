#include "tcm/algebra.hpp"

#include <numeric>
#include <utility>

namespace tcm {

std::string to_string(Pair p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

// FiniteMonoid

FiniteMonoid::FiniteMonoid(std::size_t size, std::vector<Element> table, Element identity)
    : size_(size), table_(std::move(table)), identity_(identity) {
  std::vector<Element> inverses(size_);
  for (Element x = 0; x < size_; ++x) {
    bool found = false;
    for (Element y = 0; y < size_ && !found; ++y) {
      if (mul(x, y) == identity_ && mul(y, x) == identity_) {
        inverses[x] = y;
        found = true;
      }
    }
    if (!found)
      return;
  }
  inverses_ = std::move(inverses);
}

FiniteMonoid FiniteMonoid::from_table(const std::vector<std::vector<Element>> &table,
                                      Element identity) {
  const std::size_t n = table.size();
  if (n == 0)
    throw FormatError("monoid table is empty");
  if (identity >= n)
    throw FormatError("identity index out of range");
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (const auto &row : table) {
    if (row.size() != n)
      throw FormatError("monoid table is not square");
    for (Element v : row) {
      if (v >= n)
        throw FormatError("monoid table entry out of range");
      flat.push_back(v);
    }
  }
  auto at = [&](Element x, Element y) { return flat[x * n + y]; };
  for (Element x = 0; x < n; ++x) {
    if (at(identity, x) != x || at(x, identity) != x)
      throw IdentityViolation(x);
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (at(at(x, y), z) != at(x, at(y, z)))
          throw AssociativityViolation(x, y, z);
  return FiniteMonoid(n, std::move(flat), identity);
}

FiniteMonoid FiniteMonoid::from_table(const std::vector<std::vector<Element>> &table) {
  const std::size_t n = table.size();
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      if (table[e].size() != n || table[x].size() != n)
        throw FormatError("monoid table is not square");
      ok = table[e][x] == x && table[x][e] == x;
    }
    if (ok)
      return from_table(table, e);
  }
  throw IdentityViolation(0);
}

bool FiniteMonoid::is_commutative() const {
  for (Element x = 0; x < size_; ++x)
    for (Element y = x + 1; y < size_; ++y)
      if (mul(x, y) != mul(y, x))
        return false;
  return true;
}

Element FiniteMonoid::inverse(Element x) const {
  if (!inverses_)
    throw NotInvertible("monoid is not a group");
  return (*inverses_)[x];
}

std::vector<std::vector<Element>> FiniteMonoid::rows() const {
  std::vector<std::vector<Element>> out(size_);
  for (Element x = 0; x < size_; ++x)
    out[x].assign(table_.begin() + x * size_, table_.begin() + (x + 1) * size_);
  return out;
}

// FiniteAbelianGroup

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint32_t> factors)
    : factors_(std::move(factors)), order_(1), exponent_(1) {
  if (factors_.empty())
    throw InvalidGroup("a non-trivial group needs at least one invariant factor");
  for (auto f : factors_) {
    if (f < 2)
      throw InvalidGroup("invariant factor " + std::to_string(f) +
                         " is below 2; the group must be non-trivial");
    order_ *= f;
    if (order_ > 4096)
      throw InvalidGroup("group order exceeds 4096");
    exponent_ = std::lcm(exponent_, f);
  }

  add_.resize(order_ * order_);
  neg_.resize(order_);
  std::vector<std::vector<std::uint32_t>> res(order_);
  for (Element x = 0; x < order_; ++x)
    res[x] = residues(x);
  std::vector<std::uint32_t> buf(factors_.size());
  for (Element x = 0; x < order_; ++x) {
    for (Element y = 0; y < order_; ++y) {
      for (std::size_t i = 0; i < factors_.size(); ++i)
        buf[i] = (res[x][i] + res[y][i]) % factors_[i];
      add_[x * order_ + y] = from_residues(buf);
    }
    for (std::size_t i = 0; i < factors_.size(); ++i)
      buf[i] = (factors_[i] - res[x][i]) % factors_[i];
    neg_[x] = from_residues(buf);
  }
}

Element FiniteAbelianGroup::times(Element x, std::int64_t k) const {
  std::int64_t m = k % static_cast<std::int64_t>(exponent_);
  if (m < 0)
    m += exponent_;
  Element acc = 0;
  Element base = x;
  // double-and-add keeps this cheap for large exponents
  while (m > 0) {
    if (m & 1)
      acc = add(acc, base);
    base = add(base, base);
    m >>= 1;
  }
  return acc;
}

std::vector<std::uint32_t> FiniteAbelianGroup::residues(Element x) const {
  std::vector<std::uint32_t> out(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    out[i] = x % factors_[i];
    x /= factors_[i];
  }
  return out;
}

Element FiniteAbelianGroup::from_residues(std::span<const std::uint32_t> residues) const {
  Element x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    x = x * factors_[i] + residues[i] % factors_[i];
  return x;
}

std::string FiniteAbelianGroup::spec() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i)
      out += 'x';
    out += std::to_string(factors_[i]);
  }
  return out;
}

FiniteMonoid FiniteAbelianGroup::monoid() const {
  std::vector<std::vector<Element>> table(order_, std::vector<Element>(order_));
  for (Element x = 0; x < order_; ++x)
    for (Element y = 0; y < order_; ++y)
      table[x][y] = add(x, y);
  return FiniteMonoid::from_table(table, zero());
}

GroupPtr make_cyclic_product(std::vector<std::uint32_t> factors) {
  return std::make_shared<const FiniteAbelianGroup>(std::move(factors));
}

GroupPtr parse_group_spec(std::string_view spec) {
  std::vector<std::uint32_t> factors;
  std::size_t pos = 0;
  while (true) {
    auto next = spec.find('x', pos);
    auto token = spec.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    if (token.empty() || token.size() > 6)
      throw FormatError("bad group spec '" + std::string(spec) + "'");
    std::uint32_t value = 0;
    for (char c : token) {
      if (c < '0' || c > '9')
        throw FormatError("bad group spec '" + std::string(spec) + "'");
      value = value * 10 + static_cast<std::uint32_t>(c - '0');
    }
    factors.push_back(value);
    if (next == std::string_view::npos)
      break;
    pos = next + 1;
  }
  return make_cyclic_product(std::move(factors));
}

bool same_base(const GroupPtr &a, const GroupPtr &b) {
  return a == b || (a && b && *a == *b);
}

// Endo

namespace {

void require_same(const Endo &a, const Endo &b) {
  if (!same_base(a.base(), b.base()))
    throw BaseMismatch();
}

} // namespace

Endo Endo::from_function(GroupPtr base, const std::function<Pair(Pair)> &f) {
  std::vector<std::uint32_t> table(base->pair_count());
  for (std::size_t i = 0; i < table.size(); ++i)
    table[i] = static_cast<std::uint32_t>(base->pair_index(f(base->pair_at(i))));
  return from_table(std::move(base), std::move(table));
}

Endo Endo::from_table(GroupPtr base, std::vector<std::uint32_t> table) {
  if (table.size() != base->pair_count())
    throw NotAdditive("endomorphism table has the wrong length");
  for (auto v : table)
    if (v >= base->pair_count())
      throw NotAdditive("endomorphism table entry out of range");
  Endo e(std::move(base), std::move(table));
  if (!e.is_additive())
    throw NotAdditive("table is not additive on A x A");
  return e;
}

Endo Endo::identity(GroupPtr base) {
  std::vector<std::uint32_t> table(base->pair_count());
  std::iota(table.begin(), table.end(), 0u);
  return Endo(std::move(base), std::move(table));
}

Endo Endo::zero(GroupPtr base) {
  std::vector<std::uint32_t> table(base->pair_count(), 0u);
  return Endo(std::move(base), std::move(table));
}

Endo Endo::scalar(GroupPtr base, std::int64_t k) { return identity(std::move(base)).times(k); }

bool Endo::is_zero() const {
  for (auto v : table_)
    if (v != 0)
      return false;
  return true;
}

bool Endo::is_additive() const {
  const auto &g = *base_;
  if (table_[0] != 0)
    return false;
  const std::size_t n = g.pair_count();
  for (std::size_t i = 0; i < n; ++i) {
    const Pair p = g.pair_at(i);
    const Pair fp = g.pair_at(table_[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const Pair q = g.pair_at(j);
      const Pair lhs = g.pair_at(table_[g.pair_index(g.pair_add(p, q))]);
      if (lhs != g.pair_add(fp, g.pair_at(table_[j])))
        return false;
    }
  }
  return true;
}

bool Endo::is_invertible() const {
  std::vector<bool> hit(table_.size(), false);
  for (auto v : table_) {
    if (hit[v])
      return false;
    hit[v] = true;
  }
  return true;
}

Endo Endo::inverse() const {
  if (!is_invertible())
    throw NotInvertible("endomorphism is not a bijection of A x A");
  std::vector<std::uint32_t> inv(table_.size());
  for (std::uint32_t i = 0; i < table_.size(); ++i)
    inv[table_[i]] = i;
  return Endo(base_, std::move(inv));
}

Endo Endo::times(std::int64_t k) const {
  std::vector<std::uint32_t> out(table_.size());
  for (std::size_t i = 0; i < table_.size(); ++i)
    out[i] = static_cast<std::uint32_t>(
        base_->pair_index(base_->pair_times(base_->pair_at(table_[i]), k)));
  return Endo(base_, std::move(out));
}

Endo operator+(const Endo &a, const Endo &b) {
  require_same(a, b);
  const auto &g = *a.base_;
  std::vector<std::uint32_t> out(a.table_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint32_t>(
        g.pair_index(g.pair_add(g.pair_at(a.table_[i]), g.pair_at(b.table_[i]))));
  return Endo(a.base_, std::move(out));
}

Endo operator-(const Endo &a) {
  const auto &g = *a.base_;
  std::vector<std::uint32_t> out(a.table_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint32_t>(g.pair_index(g.pair_neg(g.pair_at(a.table_[i]))));
  return Endo(a.base_, std::move(out));
}

Endo operator-(const Endo &a, const Endo &b) { return a + (-b); }

Endo operator*(const Endo &a, const Endo &b) {
  require_same(a, b);
  std::vector<std::uint32_t> out(a.table_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a.table_[b.table_[i]];
  return Endo(a.base_, std::move(out));
}

bool operator==(const Endo &a, const Endo &b) {
  return same_base(a.base_, b.base_) && a.table_ == b.table_;
}

Endo endo_xi(GroupPtr base) {
  const auto *g = base.get();
  return Endo::from_function(std::move(base),
                             [g](Pair p) { return Pair{p.first, g->add(p.first, p.second)}; });
}

Endo endo_zeta(GroupPtr base) {
  return Endo::from_function(std::move(base), [](Pair p) { return Pair{p.second, p.second}; });
}

} // namespace tcm
