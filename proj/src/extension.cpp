#include "rpo/generic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rpo {

LinearOrder::LinearOrder(std::vector<Element> sequence) : seq_(std::move(sequence)), rank_(seq_.size()) {
  std::vector<bool> seen(seq_.size(), false);
  for (std::size_t r = 0; r < seq_.size(); ++r) {
    const Element e = seq_[r];
    if (e >= seq_.size() || seen[e]) throw RoleError("linear order is not a permutation of 0..n-1");
    seen[e] = true;
    rank_[e] = r;
  }
}

LinearOrder LinearOrder::identity(std::size_t n) {
  std::vector<Element> seq(n);
  std::iota(seq.begin(), seq.end(), Element{0});
  return LinearOrder(std::move(seq));
}

void LinearOrder::insert_new(std::size_t position) {
  if (position > seq_.size()) throw std::out_of_range("LinearOrder::insert_new: position out of range");
  const Element e = seq_.size();
  seq_.insert(seq_.begin() + static_cast<std::ptrdiff_t>(position), e);
  rank_.push_back(position);
  for (std::size_t r = position + 1; r < seq_.size(); ++r) rank_[seq_[r]] = r;
}

bool extends(const LinearOrder& order, const FinitePoset& p) {
  if (order.size() != p.size()) return false;
  for (auto [i, j] : p.strict_pairs())
    if (!order.precedes(i, j)) return false;
  return true;
}

LanguageKind kind_of(const Language& lang) noexcept { return static_cast<LanguageKind>(lang.index()); }

std::string_view to_string(LanguageKind k) noexcept {
  switch (k) {
    case LanguageKind::Plain: return "plain";
    case LanguageKind::WithUpset: return "upset";
    case LanguageKind::Ordered: return "ordered";
  }
  return "?";
}

std::optional<LanguageKind> parse_language_kind(std::string_view s) noexcept {
  if (s == "plain") return LanguageKind::Plain;
  if (s == "upset") return LanguageKind::WithUpset;
  if (s == "ordered") return LanguageKind::Ordered;
  return std::nullopt;
}

void validate_language(const FinitePoset& p, const Language& lang) {
  if (const auto* u = std::get_if<UpsetLanguage>(&lang)) {
    if (u->upset.size() != p.size()) throw RoleError("upset width does not match poset size");
    if (!check_role(p, u->upset, Role::UpClosed)) throw RoleError("upset is not upward closed");
  } else if (const auto* o = std::get_if<OrderedLanguage>(&lang)) {
    if (o->order.size() != p.size()) throw RoleError("linear order size does not match poset size");
    if (!extends(o->order, p)) throw RoleError("linear order does not extend the partial order");
  }
}

namespace {

struct Split {
  std::vector<Element> above_y;  // base elements the new point lies under (rel Lt)
  std::vector<Element> below_y;  // base elements under the new point (rel Gt)
};

Split split(const ExtensionType& ext) {
  Split s;
  for (std::size_t i = 0; i < ext.base.size(); ++i) {
    if (ext.rels[i] == PairRel::Lt) s.above_y.push_back(ext.base[i]);
    if (ext.rels[i] == PairRel::Gt) s.below_y.push_back(ext.base[i]);
  }
  return s;
}

// Poset consistency of the relation vector against the order on the base.
bool order_consistent(const FinitePoset& p, const ExtensionType& ext) {
  const std::size_t k = ext.base.size();
  for (std::size_t i = 0; i < k; ++i) {
    const PairRel ri = ext.rels[i];
    if (ri == PairRel::Eq) return false;
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const PairRel rj = ext.rels[j];
      const Element a = ext.base[i], b = ext.base[j];
      // y > a and b < a force y > b; y < a and a < b force y < b.
      if (ri == PairRel::Gt && p.less(b, a) && rj != PairRel::Gt) return false;
      if (ri == PairRel::Lt && p.less(a, b) && rj != PairRel::Lt) return false;
      // a < y < b forces a < b.
      if (ri == PairRel::Gt && rj == PairRel::Lt && !p.less(a, b)) return false;
    }
  }
  return true;
}

std::vector<Element> base_by_rank(const ExtensionType& ext, const LinearOrder& order) {
  std::vector<Element> b = ext.base;
  std::sort(b.begin(), b.end(), [&](Element x, Element y) { return order.precedes(x, y); });
  return b;
}

bool annotation_consistent(const ExtensionType& ext, const Language& lang) {
  const std::size_t k = ext.base.size();
  switch (kind_of(lang)) {
    case LanguageKind::Plain:
      return !ext.in_upset && !ext.slot;
    case LanguageKind::WithUpset: {
      if (!ext.in_upset || ext.slot) return false;
      const Bits& f = std::get<UpsetLanguage>(lang).upset;
      for (std::size_t i = 0; i < k; ++i) {
        // y in F and y < a need a in F; a in F and a < y need y in F.
        if (*ext.in_upset && ext.rels[i] == PairRel::Lt && !f.test(ext.base[i])) return false;
        if (!*ext.in_upset && ext.rels[i] == PairRel::Gt && f.test(ext.base[i])) return false;
      }
      return true;
    }
    case LanguageKind::Ordered: {
      if (!ext.slot || ext.in_upset || *ext.slot > k) return false;
      const auto& order = std::get<OrderedLanguage>(lang).order;
      const auto sorted = base_by_rank(ext, order);
      for (std::size_t r = 0; r < k; ++r) {
        const auto idx = static_cast<std::size_t>(std::find(ext.base.begin(), ext.base.end(), sorted[r]) - ext.base.begin());
        const bool before_y = r < *ext.slot;
        if (ext.rels[idx] == PairRel::Gt && !before_y) return false;
        if (ext.rels[idx] == PairRel::Lt && before_y) return false;
      }
      return true;
    }
  }
  return false;
}

bool well_formed(const FinitePoset& p, const ExtensionType& ext) {
  if (ext.base.size() != ext.rels.size()) return false;
  for (std::size_t i = 0; i < ext.base.size(); ++i) {
    if (ext.base[i] >= p.size()) return false;
    if (i > 0 && ext.base[i - 1] >= ext.base[i]) return false;
  }
  return true;
}

}  // namespace

bool is_consistent(const FinitePoset& p, const ExtensionType& ext, const Language& lang) {
  return well_formed(p, ext) && order_consistent(p, ext) && annotation_consistent(ext, lang);
}

std::vector<ExtensionType> consistent_extension_types(const FinitePoset& p, std::span<const Element> base,
                                                      const Language& lang) {
  validate_language(p, lang);
  ExtensionType proto;
  proto.base.assign(base.begin(), base.end());
  std::sort(proto.base.begin(), proto.base.end());
  if (std::adjacent_find(proto.base.begin(), proto.base.end()) != proto.base.end())
    throw std::invalid_argument("consistent_extension_types: repeated base element");
  for (Element e : proto.base)
    if (e >= p.size()) throw std::out_of_range("consistent_extension_types: base element out of range");

  const std::size_t k = proto.base.size();
  constexpr PairRel kChoices[] = {PairRel::Lt, PairRel::Gt, PairRel::Inc};
  std::vector<ExtensionType> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= 3;
  proto.rels.assign(k, PairRel::Lt);
  for (std::size_t code = 0; code < total; ++code) {
    // First base element is the most significant base-3 digit.
    std::size_t rest = code;
    for (std::size_t i = k; i-- > 0;) {
      proto.rels[i] = kChoices[rest % 3];
      rest /= 3;
    }
    if (!order_consistent(p, proto)) continue;
    switch (kind_of(lang)) {
      case LanguageKind::Plain:
        out.push_back(proto);
        break;
      case LanguageKind::WithUpset:
        for (bool flag : {false, true}) {
          ExtensionType t = proto;
          t.in_upset = flag;
          if (annotation_consistent(t, lang)) out.push_back(std::move(t));
        }
        break;
      case LanguageKind::Ordered:
        for (std::size_t s = 0; s <= k; ++s) {
          ExtensionType t = proto;
          t.slot = s;
          if (annotation_consistent(t, lang)) out.push_back(std::move(t));
        }
        break;
    }
  }
  return out;
}

FinitePoset realize_extension(const FinitePoset& p, const ExtensionType& ext) {
  if (!well_formed(p, ext) || !order_consistent(p, ext))
    throw InconsistentExtension("extension type is inconsistent with the order on its base");
  const auto sp = split(ext);
  const Bits below_new = down_closure(p, make_bits(p.size(), sp.below_y));
  const Bits above_new = up_closure(p, make_bits(p.size(), sp.above_y));
  return p.with_point(below_new, above_new);
}

std::pair<std::size_t, std::size_t> admissible_ranks(const Structure& s, const ExtensionType& ext) {
  const auto* o = std::get_if<OrderedLanguage>(&s.language);
  if (!o || !ext.slot) throw std::invalid_argument("admissible_ranks: ordered language and slot required");
  const auto sorted = base_by_rank(ext, o->order);
  const std::size_t slot = *ext.slot;
  const std::size_t lo = slot == 0 ? 0 : o->order.rank(sorted[slot - 1]) + 1;
  const std::size_t hi = slot == sorted.size() ? o->order.size() : o->order.rank(sorted[slot]);
  return {lo, hi};
}

Structure realize_extension(Structure s, const ExtensionType& ext, std::optional<std::size_t> rank) {
  if (!is_consistent(s.poset, ext, s.language))
    throw InconsistentExtension("extension type is inconsistent in its language");
  std::optional<std::size_t> insert_at;
  if (kind_of(s.language) == LanguageKind::Ordered) {
    const auto [lo, hi] = admissible_ranks(s, ext);
    insert_at = rank.value_or(lo);
    if (*insert_at < lo || *insert_at > hi) throw std::out_of_range("realize_extension: rank outside the admissible slot");
  }
  const auto sp = split(ext);
  const Bits below_new = down_closure(s.poset, make_bits(s.poset.size(), sp.below_y));
  const Bits above_new = up_closure(s.poset, make_bits(s.poset.size(), sp.above_y));
  s.poset = std::move(s.poset).with_point(below_new, above_new);
  if (auto* u = std::get_if<UpsetLanguage>(&s.language)) {
    u->upset.push_back(*ext.in_upset);
  } else if (auto* o = std::get_if<OrderedLanguage>(&s.language)) {
    o->order.insert_new(*insert_at);
  }
  return s;
}

bool realizes(const Structure& s, const ExtensionType& ext, Element x) {
  if (x >= s.poset.size()) return false;
  if (std::find(ext.base.begin(), ext.base.end(), x) != ext.base.end()) return false;
  for (std::size_t i = 0; i < ext.base.size(); ++i)
    if (s.poset.rel(x, ext.base[i]) != ext.rels[i]) return false;
  if (const auto* u = std::get_if<UpsetLanguage>(&s.language)) {
    if (!ext.in_upset || u->upset.test(x) != *ext.in_upset) return false;
  } else if (const auto* o = std::get_if<OrderedLanguage>(&s.language)) {
    if (!ext.slot) return false;
    std::size_t before = 0;
    for (Element b : ext.base) before += o->order.precedes(b, x) ? 1 : 0;
    if (before != *ext.slot) return false;
  }
  return true;
}

std::optional<Element> find_witness(const Structure& s, const ExtensionType& ext) {
  const FinitePoset& p = s.poset;
  Bits cand(p.size());
  cand.set();
  for (std::size_t i = 0; i < ext.base.size(); ++i) {
    const Element b = ext.base[i];
    cand.reset(b);
    switch (ext.rels[i]) {
      case PairRel::Lt: cand &= p.below(b); break;  // witness below b
      case PairRel::Gt: cand &= p.above(b); break;
      case PairRel::Inc: cand -= p.below(b); cand -= p.above(b); break;
      case PairRel::Eq: return std::nullopt;
    }
    if (cand.none()) return std::nullopt;
  }
  if (const auto* u = std::get_if<UpsetLanguage>(&s.language)) {
    if (!ext.in_upset) return std::nullopt;
    if (*ext.in_upset) cand &= u->upset;
    else cand -= u->upset;
  }
  if (kind_of(s.language) == LanguageKind::Ordered) {
    if (!ext.slot || *ext.slot > ext.base.size()) return std::nullopt;
    const auto& order = std::get<OrderedLanguage>(s.language).order;
    const auto [lo, hi] = admissible_ranks(s, ext);
    // Existing elements sit strictly between the slot neighbours: ranks lo..hi-1.
    for (auto x = cand.find_first(); x != Bits::npos; x = cand.find_next(x)) {
      const std::size_t r = order.rank(x);
      if (r >= lo && r < hi) return x;
    }
    return std::nullopt;
  }
  const auto x = cand.find_first();
  if (x == Bits::npos) return std::nullopt;
  return x;
}

}  // namespace rpo
