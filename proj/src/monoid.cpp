#include "hopfcore/monoid.hpp"

#include "hopfcore/errors.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <set>

namespace hopfcore {

MultiIndex MultiIndex::delta(std::uint32_t position, std::uint32_t multiplicity) {
  MultiIndex m;
  if (multiplicity > 0)
    m.entries_.emplace_back(position, multiplicity);
  return m;
}

MultiIndex MultiIndex::from_exponents(std::span<const std::uint32_t> exponents) {
  MultiIndex m;
  for (std::uint32_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > 0)
      m.entries_.emplace_back(i, exponents[i]);
  return m;
}

std::uint32_t MultiIndex::operator[](std::uint32_t position) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), position,
                             [](const Entry& e, std::uint32_t p) { return e.first < p; });
  return it != entries_.end() && it->first == position ? it->second : 0;
}

void MultiIndex::set(std::uint32_t position, std::uint32_t multiplicity) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), position,
                             [](const Entry& e, std::uint32_t p) { return e.first < p; });
  if (it != entries_.end() && it->first == position) {
    if (multiplicity == 0)
      entries_.erase(it);
    else
      it->second = multiplicity;
  } else if (multiplicity > 0) {
    entries_.insert(it, {position, multiplicity});
  }
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  MultiIndex r;
  auto a = entries_.begin(), b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      r.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      r.entries_.push_back(*b++);
    } else {
      r.entries_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return r;
}

bool MultiIndex::divides(const MultiIndex& other) const {
  for (const auto& [p, k] : entries_)
    if (other[p] < k)
      return false;
  return true;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  assert(other.divides(*this));
  MultiIndex r = *this;
  for (const auto& [p, k] : other.entries_)
    r.set(p, r[p] - k);
  return r;
}

std::vector<std::uint32_t> MultiIndex::exponents(std::size_t generator_count) const {
  std::vector<std::uint32_t> e(generator_count, 0);
  for (const auto& [p, k] : entries_) {
    assert(p < generator_count);
    e[p] = k;
  }
  return e;
}

GeneratorSet::GeneratorSet(std::vector<Generator> generators)
    : generators_(std::move(generators)) {
  std::set<std::string> seen;
  unsigned previous = 0;
  for (const auto& g : generators_) {
    if (g.degree == 0)
      throw FormatError("generator '" + g.id + "' has degree 0");
    if (g.degree < previous)
      throw FormatError("generators must be listed in nondecreasing degree (at '" +
                        g.id + "')");
    if (!seen.insert(g.id).second)
      throw FormatError("duplicate generator id '" + g.id + "'");
    previous = g.degree;
  }
}

std::uint32_t GeneratorSet::index_of(const std::string& id) const {
  for (std::uint32_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].id == id)
      return i;
  throw ForeignGenerator("unknown generator '" + id + "'");
}

void GeneratorSet::validate(const MultiIndex& m) const {
  if (!m.is_zero() && m.max_position() >= generators_.size())
    throw ForeignGenerator("multi-index refers to generator position " +
                           std::to_string(m.max_position()) + " of a set of size " +
                           std::to_string(generators_.size()));
}

MultiIndex GeneratorSet::delta(const std::string& id, std::uint32_t multiplicity) const {
  return MultiIndex::delta(index_of(id), multiplicity);
}

MultiIndex GeneratorSet::add(const MultiIndex& m, const MultiIndex& n) const {
  validate(m);
  validate(n);
  return m + n;
}

unsigned GeneratorSet::degree(const MultiIndex& m) const {
  validate(m);
  unsigned d = 0;
  for (const auto& [p, k] : m.entries())
    d += k * generators_[p].degree;
  return d;
}

std::strong_ordering GeneratorSet::compare(const MultiIndex& m, const MultiIndex& n) const {
  if (auto c = degree(m) <=> degree(n); c != 0)
    return c;
  // Walk both supports from the largest position down to the first difference.
  const auto& a = m.entries();
  const auto& b = n.entries();
  auto i = a.rbegin(), j = b.rbegin();
  while (i != a.rend() || j != b.rend()) {
    if (j == b.rend() || (i != a.rend() && i->first > j->first))
      return std::strong_ordering::greater;
    if (i == a.rend() || j->first > i->first)
      return std::strong_ordering::less;
    if (i->second != j->second)
      return i->second <=> j->second;
    ++i;
    ++j;
  }
  return std::strong_ordering::equal;
}

MultiIndex GeneratorSet::min_of(std::span<const MultiIndex> set) const {
  if (set.empty())
    throw EmptySet("min_of: empty collection");
  const MultiIndex* best = &set[0];
  validate(*best);
  for (const auto& m : set.subspan(1))
    if (compare(m, *best) < 0)
      best = &m;
  return *best;
}

std::vector<MultiIndex> GeneratorSet::enumerate_up_to(unsigned d) const {
  std::vector<MultiIndex> out;
  std::vector<std::uint32_t> exps(generators_.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned budget) -> void {
    if (pos == generators_.size()) {
      out.push_back(MultiIndex::from_exponents(exps));
      return;
    }
    const unsigned w = generators_[pos].degree;
    for (std::uint32_t k = 0; k * w <= budget; ++k) {
      exps[pos] = k;
      self(self, pos + 1, budget - k * w);
    }
    exps[pos] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(),
            [this](const MultiIndex& a, const MultiIndex& b) { return compare(a, b) < 0; });
  return out;
}

std::size_t GeneratorSet::count_of_degree(unsigned d) const {
  // Coefficient of t^d in ∏ 1/(1 - t^{|λ|}).
  std::vector<std::size_t> c(d + 1, 0);
  c[0] = 1;
  for (const auto& g : generators_)
    for (unsigned k = g.degree; k <= d; ++k)
      c[k] += c[k - g.degree];
  return c[d];
}

std::string GeneratorSet::format(const MultiIndex& m) const {
  validate(m);
  if (m.is_zero())
    return "0";
  std::string out;
  for (const auto& [p, k] : m.entries()) {
    if (!out.empty())
      out += '+';
    if (k > 1)
      out += std::to_string(k) + '*';
    out += generators_[p].id;
  }
  return out;
}

std::string GeneratorSet::format_monomial(const MultiIndex& m, bool divided) const {
  validate(m);
  if (m.is_zero())
    return "1";
  std::string out;
  for (const auto& [p, k] : m.entries()) {
    if (!out.empty())
      out += '*';
    out += generators_[p].id;
    if (k > 1)
      out += divided ? "^[" + std::to_string(k) + "]" : "^" + std::to_string(k);
  }
  return out;
}

MultiIndex GeneratorSet::parse(const std::string& text) const {
  if (text == "0")
    return {};
  MultiIndex m;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('+', start);
    if (end == std::string::npos)
      end = text.size();
    std::string term = text.substr(start, end - start);
    if (term.empty())
      throw FormatError("malformed multi-index '" + text + "'");
    std::uint32_t k = 1;
    if (auto star = term.find('*'); star != std::string::npos) {
      auto [ptr, ec] = std::from_chars(term.data(), term.data() + star, k);
      if (ec != std::errc() || ptr != term.data() + star || k == 0)
        throw FormatError("malformed multiplicity in '" + text + "'");
      term = term.substr(star + 1);
    }
    m = m + MultiIndex::delta(index_of(term), k);
    start = end + 1;
  }
  return m;
}

} // namespace hopfcore
