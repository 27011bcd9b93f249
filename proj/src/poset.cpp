#include "rpo/poset.hpp"

#include <algorithm>
#include <sstream>

namespace rpo {

std::string_view to_string(PairRel r) noexcept {
  switch (r) {
    case PairRel::Eq: return "Eq";
    case PairRel::Lt: return "Lt";
    case PairRel::Gt: return "Gt";
    case PairRel::Inc: return "Inc";
  }
  return "?";
}

std::optional<PairRel> parse_pair_rel(std::string_view s) noexcept {
  if (s == "Eq") return PairRel::Eq;
  if (s == "Lt") return PairRel::Lt;
  if (s == "Gt") return PairRel::Gt;
  if (s == "Inc") return PairRel::Inc;
  return std::nullopt;
}

std::string_view to_string(Role r) noexcept {
  switch (r) {
    case Role::UpClosed: return "UpClosed";
    case Role::Filter: return "Filter";
    case Role::Ideal: return "Ideal";
    case Role::DownClosed: return "DownClosed";
  }
  return "?";
}

Bits make_bits(std::size_t n, std::span<const Element> ms) {
  Bits b(n);
  for (Element e : ms) {
    if (e >= n) throw std::out_of_range("element " + std::to_string(e) + " out of range for size " + std::to_string(n));
    b.set(e);
  }
  return b;
}

Bits make_bits(std::size_t n, std::initializer_list<Element> ms) {
  return make_bits(n, std::span<const Element>(ms.begin(), ms.size()));
}

std::vector<Element> members(const Bits& s) {
  std::vector<Element> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

std::optional<std::string> find_axiom_violation(std::span<const Bits> above) {
  const std::size_t n = above.size();
  for (Element i = 0; i < n; ++i) {
    if (above[i].size() != n) return "row " + std::to_string(i) + " has wrong width";
    if (above[i].test(i)) return "irreflexivity: " + std::to_string(i) + " < " + std::to_string(i);
  }
  for (Element i = 0; i < n; ++i) {
    for (auto j = above[i].find_first(); j != Bits::npos; j = above[i].find_next(j)) {
      if (above[j].test(i)) {
        return "antisymmetry: " + std::to_string(i) + " < " + std::to_string(j) + " and " + std::to_string(j) +
               " < " + std::to_string(i);
      }
      if (!above[j].is_subset_of(above[i])) {
        Bits missing = above[j] - above[i];
        const auto k = missing.find_first();
        std::ostringstream os;
        os << "transitivity: " << i << " < " << j << " and " << j << " < " << k << " but not " << i << " < " << k;
        return os.str();
      }
    }
  }
  return std::nullopt;
}

namespace {

std::vector<Bits> transpose(const std::vector<Bits>& up) {
  const std::size_t n = up.size();
  std::vector<Bits> down(n, Bits(n));
  for (Element i = 0; i < n; ++i)
    for (auto j = up[i].find_first(); j != Bits::npos; j = up[i].find_next(j)) down[j].set(i);
  return down;
}

}  // namespace

FinitePoset FinitePoset::validated(std::vector<Bits> up) {
  if (auto v = find_axiom_violation(up)) throw AxiomError(*v);
  auto down = transpose(up);
  return FinitePoset(std::move(up), std::move(down));
}

FinitePoset FinitePoset::antichain(std::size_t n) {
  return FinitePoset(std::vector<Bits>(n, Bits(n)), std::vector<Bits>(n, Bits(n)));
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<Bits> up(n, Bits(n));
  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j) up[i].set(j);
  auto down = transpose(up);
  return FinitePoset(std::move(up), std::move(down));
}

FinitePoset FinitePoset::from_relation(std::size_t n, std::span<const ElementPair> lt) {
  std::vector<Bits> up(n, Bits(n));
  for (auto [i, j] : lt) {
    if (i >= n || j >= n) throw AxiomError("pair (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
    up[i].set(j);
  }
  return validated(std::move(up));
}

FinitePoset FinitePoset::from_rows(std::vector<Bits> above) { return validated(std::move(above)); }

Bits FinitePoset::incomparable(Element i) const {
  Bits r = up_[i] | down_[i];
  r.set(i);
  r.flip();
  return r;
}

std::vector<ElementPair> FinitePoset::strict_pairs() const {
  std::vector<ElementPair> out;
  for (Element i = 0; i < size(); ++i)
    for (auto j = up_[i].find_first(); j != Bits::npos; j = up_[i].find_next(j)) out.emplace_back(i, j);
  return out;
}

FinitePoset FinitePoset::with_point(const Bits& below_new, const Bits& above_new) && {
  const std::size_t n = size();
  if (below_new.size() != n || above_new.size() != n) throw AxiomError("with_point: set width mismatch");
  if (below_new.intersects(above_new)) throw AxiomError("with_point: new point both above and below an element");
  for (auto b = below_new.find_first(); b != Bits::npos; b = below_new.find_next(b)) {
    if (!down_[b].is_subset_of(below_new)) throw AxiomError("with_point: lower set not down-closed at " + std::to_string(b));
    if (!above_new.is_subset_of(up_[b])) throw AxiomError("with_point: " + std::to_string(b) + " not below every upper element");
  }
  for (auto a = above_new.find_first(); a != Bits::npos; a = above_new.find_next(a))
    if (!up_[a].is_subset_of(above_new)) throw AxiomError("with_point: upper set not up-closed at " + std::to_string(a));

  for (Element i = 0; i < n; ++i) {
    up_[i].push_back(below_new.test(i));
    down_[i].push_back(above_new.test(i));
  }
  Bits up_row = above_new;
  up_row.push_back(false);
  Bits down_row = below_new;
  down_row.push_back(false);
  up_.push_back(std::move(up_row));
  down_.push_back(std::move(down_row));
  return std::move(*this);
}

FinitePoset FinitePoset::with_point(const Bits& below_new, const Bits& above_new) const& {
  FinitePoset copy = *this;
  return std::move(copy).with_point(below_new, above_new);
}

FinitePoset make_poset(std::size_t n, std::span<const ElementPair> strict_pairs) {
  std::vector<Bits> up(n, Bits(n));
  for (auto [i, j] : strict_pairs) {
    if (i >= n || j >= n) throw std::out_of_range("pair (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
    up[i].set(j);
  }
  // Warshall on bit rows.
  for (Element k = 0; k < n; ++k)
    for (Element i = 0; i < n; ++i)
      if (up[i].test(k)) up[i] |= up[k];
  for (Element i = 0; i < n; ++i)
    if (up[i].test(i)) throw CycleError("closure puts " + std::to_string(i) + " below itself");
  return FinitePoset::from_rows(std::move(up));
}

FinitePoset make_poset(std::size_t n, std::initializer_list<ElementPair> strict_pairs) {
  return make_poset(n, std::span<const ElementPair>(strict_pairs.begin(), strict_pairs.size()));
}

PairRel pair_rel(const FinitePoset& p, Element i, Element j) {
  if (i >= p.size() || j >= p.size()) throw std::out_of_range("pair_rel: index out of range");
  return p.rel(i, j);
}

Bits up_closure(const FinitePoset& p, const Bits& s) {
  Bits r = s;
  for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) r |= p.above(i);
  return r;
}

Bits down_closure(const FinitePoset& p, const Bits& s) {
  Bits r = s;
  for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) r |= p.below(i);
  return r;
}

bool check_role(const FinitePoset& p, const Bits& s, Role role) {
  if (s.size() != p.size()) throw std::invalid_argument("check_role: subset width mismatch");
  const bool upward = role == Role::UpClosed || role == Role::Filter;
  if (upward ? up_closure(p, s) != s : down_closure(p, s) != s) return false;
  if (role == Role::UpClosed || role == Role::DownClosed) return true;

  // Directedness: every two members have a common lower (upper) bound in s.
  const auto ms = members(s);
  for (std::size_t a = 0; a < ms.size(); ++a) {
    for (std::size_t b = a + 1; b < ms.size(); ++b) {
      Bits bx = upward ? p.below(ms[a]) : p.above(ms[a]);
      bx.set(ms[a]);
      Bits by = upward ? p.below(ms[b]) : p.above(ms[b]);
      by.set(ms[b]);
      if (!(bx & by & s).any()) return false;
    }
  }
  return true;
}

std::vector<ElementPair> hasse(const FinitePoset& p) {
  std::vector<ElementPair> out;
  for (Element i = 0; i < p.size(); ++i) {
    const Bits& up = p.above(i);
    for (auto j = up.find_first(); j != Bits::npos; j = up.find_next(j)) {
      // j covers i iff nothing above i is below j.
      if (!up.intersects(p.below(j))) out.emplace_back(i, j);
    }
  }
  return out;
}

FinitePoset induced(const FinitePoset& p, std::span<const Element> keep) {
  const std::size_t m = keep.size();
  std::vector<Bits> up(m, Bits(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (p.less(keep[a], keep[b])) up[a].set(b);
  return FinitePoset::from_rows(std::move(up));
}

}  // namespace rpo
