#include "rpo/canonical.hpp"
#include "rpo/reducts.hpp"

#include <algorithm>
#include <tuple>

namespace rpo {

CanonicalCheck is_canonical_map(const FinitePoset& src, std::span<const Element> src_consts, const FinitePoset& dst,
                                std::span<const Element> dst_consts, const ElementMap& f) {
  if (f.size() != src.size()) throw std::invalid_argument("is_canonical_map: map is not total on the source");
  for (Element e : f)
    if (e >= dst.size()) throw std::out_of_range("is_canonical_map: image out of range");

  // Label ids stand in for the unary part of the type.
  auto label_ids = [](const FinitePoset& p, std::span<const Element> consts) {
    std::vector<std::size_t> id(p.size());
    std::size_t next = 0;
    for (const auto& [label, ms] : orbit_partition(p, consts)) {
      for (Element e : ms) id[e] = next;
      ++next;
    }
    return id;
  };
  const auto src_id = label_ids(src, src_consts);
  const auto dst_id = label_ids(dst, dst_consts);

  using Key = std::tuple<PairRel, std::size_t, std::size_t>;
  std::map<Key, std::pair<Key, ElementPair>> seen;
  for (Element a = 0; a < src.size(); ++a)
    for (Element b = 0; b < src.size(); ++b) {
      const Key k{src.rel(a, b), src_id[a], src_id[b]};
      const Key img{dst.rel(f[a], f[b]), dst_id[f[a]], dst_id[f[b]]};
      auto [it, fresh] = seen.try_emplace(k, img, ElementPair{a, b});
      if (!fresh && it->second.first != img)
        return {false, std::array<Element, 4>{it->second.second.first, it->second.second.second, a, b}};
    }
  return {};
}

OrderedPoset make_ordered(FinitePoset p, LinearOrder prec) {
  if (prec.size() != p.size()) throw RoleError("make_ordered: order width does not match poset size");
  if (!extends(prec, p)) throw RoleError("make_ordered: order is not a linear extension");
  return {std::move(p), std::move(prec)};
}

OrderedPoset to_ordered(const Structure& s) {
  if (const auto* o = std::get_if<OrderedLanguage>(&s.language)) return make_ordered(s.poset, o->order);
  throw RoleError("to_ordered: structure carries no linear order");
}

std::string_view to_string(OrderedPairType t) noexcept {
  switch (t) {
    case OrderedPairType::LtPrec: return "LtPrec";
    case OrderedPairType::GtSucc: return "GtSucc";
    case OrderedPairType::IncPrec: return "IncPrec";
    case OrderedPairType::IncSucc: return "IncSucc";
  }
  return "?";
}

OrderedPairType converse(OrderedPairType t) noexcept {
  switch (t) {
    case OrderedPairType::LtPrec: return OrderedPairType::GtSucc;
    case OrderedPairType::GtSucc: return OrderedPairType::LtPrec;
    case OrderedPairType::IncPrec: return OrderedPairType::IncSucc;
    case OrderedPairType::IncSucc: return OrderedPairType::IncPrec;
  }
  return t;
}

OrderedPairType ordered_pair_type(const OrderedPoset& op, Element a, Element b) {
  if (a == b) throw std::invalid_argument("ordered_pair_type: points must differ");
  switch (op.poset.rel(a, b)) {
    case PairRel::Lt: return OrderedPairType::LtPrec;
    case PairRel::Gt: return OrderedPairType::GtSucc;
    default: return op.prec.precedes(a, b) ? OrderedPairType::IncPrec : OrderedPairType::IncSucc;
  }
}

std::string_view to_string(BehaviorKind b) noexcept {
  switch (b) {
    case BehaviorKind::Id: return "Id";
    case BehaviorKind::Rev: return "Rev";
    case BehaviorKind::ChainPres: return "ChainPres";
    case BehaviorKind::ChainRev: return "ChainRev";
    case BehaviorKind::AntichainPres: return "AntichainPres";
    case BehaviorKind::AntichainRev: return "AntichainRev";
    case BehaviorKind::Other: return "Other";
  }
  return "?";
}

const std::array<BehaviorKind, 6>& named_behaviors() {
  static const std::array<BehaviorKind, 6> all{BehaviorKind::Id,        BehaviorKind::Rev,
                                               BehaviorKind::ChainPres, BehaviorKind::ChainRev,
                                               BehaviorKind::AntichainPres, BehaviorKind::AntichainRev};
  return all;
}

namespace {

using T = OrderedPairType;

PairTypeFunction symmetric(T lt_image, T inc_image) {
  PairTypeFunction f{};
  f[static_cast<int>(T::LtPrec)] = lt_image;
  f[static_cast<int>(T::GtSucc)] = converse(lt_image);
  f[static_cast<int>(T::IncPrec)] = inc_image;
  f[static_cast<int>(T::IncSucc)] = converse(inc_image);
  return f;
}

/// Image relation of (a, b) and whether a ≺ b in the image.
std::pair<PairRel, bool> decode(T t) {
  switch (t) {
    case T::LtPrec: return {PairRel::Lt, true};
    case T::GtSucc: return {PairRel::Gt, false};
    case T::IncPrec: return {PairRel::Inc, true};
    case T::IncSucc: return {PairRel::Inc, false};
  }
  return {PairRel::Inc, true};
}

/// Rank order from a tournament given by before[i][j]; nullopt if cyclic.
std::optional<LinearOrder> order_from_tournament(const std::vector<Bits>& before) {
  const std::size_t n = before.size();
  std::vector<Element> seq(n);
  std::vector<bool> used(n);
  for (std::size_t r = 0; r < n; ++r) {
    // The element with exactly r predecessors.
    std::optional<Element> pick;
    for (Element i = 0; i < n; ++i) {
      std::size_t preds = 0;
      for (Element j = 0; j < n; ++j) preds += before[j].test(i);
      if (preds == r && !used[i]) {
        if (pick) return std::nullopt;
        pick = i;
      }
    }
    if (!pick) return std::nullopt;
    used[*pick] = true;
    seq[r] = *pick;
  }
  LinearOrder o(seq);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j)
      if (before[i].test(j) && !o.precedes(i, j)) return std::nullopt;
  return o;
}

}  // namespace

PairTypeFunction type_function_of(BehaviorKind b) {
  switch (b) {
    case BehaviorKind::Id: return symmetric(T::LtPrec, T::IncPrec);
    case BehaviorKind::Rev: return symmetric(T::GtSucc, T::IncSucc);
    case BehaviorKind::ChainPres: return symmetric(T::LtPrec, T::LtPrec);
    case BehaviorKind::ChainRev: return symmetric(T::GtSucc, T::GtSucc);
    case BehaviorKind::AntichainPres: return symmetric(T::IncPrec, T::IncPrec);
    case BehaviorKind::AntichainRev: return symmetric(T::IncSucc, T::IncSucc);
    case BehaviorKind::Other: break;
  }
  throw std::invalid_argument("type_function_of: Other has no type function");
}

bool is_converse_symmetric(const PairTypeFunction& f) {
  for (int t = 0; t < 4; ++t)
    if (f[static_cast<int>(converse(static_cast<T>(t)))] != converse(f[t])) return false;
  return true;
}

bool is_three_consistent(const PairTypeFunction& f) {
  // Points 0 ≺ 1 ≺ 2; every pair is LtPrec or IncPrec in the source.
  for (PairRel r01 : {PairRel::Lt, PairRel::Inc})
    for (PairRel r02 : {PairRel::Lt, PairRel::Inc})
      for (PairRel r12 : {PairRel::Lt, PairRel::Inc}) {
        if (!is_valid_triple_type({r01, r02, r12})) continue;
        auto image = [&](PairRel r) { return decode(f[static_cast<int>(r == PairRel::Lt ? T::LtPrec : T::IncPrec)]); };
        const auto [i01, k01] = image(r01);
        const auto [i02, k02] = image(r02);
        const auto [i12, k12] = image(r12);
        if (!is_valid_triple_type({i01, i02, i12})) return false;
        // The image ≺ must be transitive: 0→1, 1→2 kept forces 0→2 kept, and dually.
        if (k01 == k12 && k02 != k01) return false;
      }
  return true;
}

std::vector<PairTypeFunction> enumerate_consistent_type_functions() {
  std::vector<PairTypeFunction> out;
  for (int code = 0; code < 256; ++code) {
    PairTypeFunction f{};
    for (int t = 0; t < 4; ++t) f[t] = static_cast<T>(code >> (2 * t) & 3);
    if (is_converse_symmetric(f) && is_three_consistent(f)) out.push_back(f);
  }
  return out;
}

std::array<std::optional<OrderedPairType>, 4> observed_type_function(const OrderedPoset& src, const OrderedPoset& dst,
                                                                     const ElementMap& f) {
  const std::size_t n = src.poset.size();
  if (f.size() != n) throw std::invalid_argument("observed_type_function: map is not total on the source");
  std::vector<std::optional<Element>> preimage(dst.poset.size());
  for (Element a = 0; a < n; ++a) {
    if (f[a] >= dst.poset.size()) throw std::out_of_range("observed_type_function: image out of range");
    if (preimage[f[a]])
      throw NotInjective("map sends " + std::to_string(*preimage[f[a]]) + " and " + std::to_string(a) + " to " +
                         std::to_string(f[a]));
    preimage[f[a]] = a;
  }
  std::array<std::optional<T>, 4> obs;
  std::array<ElementPair, 4> first{};
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (a == b) continue;
      const int t = static_cast<int>(ordered_pair_type(src, a, b));
      const T s = ordered_pair_type(dst, f[a], f[b]);
      if (!obs[t]) {
        obs[t] = s;
        first[t] = {a, b};
      } else if (*obs[t] != s) {
        throw NotCanonical("pairs of type " + std::string(to_string(static_cast<T>(t))) + " have different images",
                           {first[t].first, first[t].second, a, b});
      }
    }
  return obs;
}

Behavior classify_behavior(const OrderedPoset& src, const OrderedPoset& dst, const ElementMap& f) {
  const auto obs = observed_type_function(src, dst, f);
  auto agrees = [&](BehaviorKind b) {
    const auto tf = type_function_of(b);
    for (int t = 0; t < 4; ++t)
      if (obs[t] && *obs[t] != tf[t]) return false;
    return true;
  };
  Behavior out;
  std::size_t matches = 0;
  for (BehaviorKind b : named_behaviors()) {
    if (!agrees(b)) continue;
    if (matches++ == 0) out.kind = b;
  }
  out.fully_determined = matches == 1;
  if (matches > 0) return out;

  // One violating pair per named behaviour.
  for (BehaviorKind b : named_behaviors()) {
    const auto tf = type_function_of(b);
    for (Element a = 0; a < src.poset.size() && out.witnesses.size() < static_cast<std::size_t>(b) + 1; ++a)
      for (Element c = 0; c < src.poset.size(); ++c) {
        if (a == c) continue;
        if (ordered_pair_type(dst, f[a], f[c]) != tf[static_cast<int>(ordered_pair_type(src, a, c))]) {
          out.witnesses.emplace_back(a, c);
          break;
        }
      }
  }
  return out;
}

std::optional<OrderedPoset> apply_type_function(const OrderedPoset& src, const PairTypeFunction& f) {
  const std::size_t n = src.poset.size();
  std::vector<Bits> up(n, Bits(n)), before(n, Bits(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (a == b) continue;
      const auto [r, prec] = decode(f[static_cast<int>(ordered_pair_type(src, a, b))]);
      if (r == PairRel::Lt) up[a].set(b);
      if (prec) before[a].set(b);
    }
  if (find_axiom_violation(up)) return std::nullopt;
  auto order = order_from_tournament(before);
  if (!order) return std::nullopt;
  auto p = FinitePoset::from_rows(std::move(up));
  if (!extends(*order, p)) return std::nullopt;
  return OrderedPoset{std::move(p), std::move(*order)};
}

std::string_view to_string(OrbitBehaviorKind k) noexcept {
  switch (k) {
    case OrbitBehaviorKind::LikeId: return "LikeId";
    case OrbitBehaviorKind::LikeRev: return "LikeRev";
    case OrbitBehaviorKind::LikeBoth: return "LikeBoth";
    case OrbitBehaviorKind::Neither: return "Neither";
  }
  return "?";
}

namespace {

const std::vector<Element>& find_block(const std::map<OrbitLabel, std::vector<Element>>& blocks, const OrbitLabel& l) {
  auto it = blocks.find(l);
  if (it == blocks.end()) throw UnknownLabel("no block with label " + to_string(l));
  return it->second;
}

void check_map(const FinitePoset& src, const FinitePoset& dst, const ElementMap& f) {
  if (f.size() != src.size()) throw std::invalid_argument("map is not total on the source");
  for (Element e : f)
    if (e >= dst.size()) throw std::out_of_range("map image out of range");
}

}  // namespace

OrbitBehavior behavior_on_orbit(const FinitePoset& src, std::span<const Element> consts, const FinitePoset& dst,
                                const ElementMap& f, const OrbitLabel& label) {
  check_map(src, dst, f);
  const auto blocks = orbit_partition(src, consts);
  const auto& ms = find_block(blocks, label);
  OrbitBehavior out{OrbitBehaviorKind::LikeBoth, std::nullopt, std::nullopt};
  for (Element a : ms)
    for (Element b : ms) {
      if (a == b) continue;
      const PairRel r = src.rel(a, b), img = dst.rel(f[a], f[b]);
      if (!out.breaks_id && img != r) out.breaks_id = ElementPair{a, b};
      if (!out.breaks_rev && img != converse(r)) out.breaks_rev = ElementPair{a, b};
    }
  if (out.breaks_id && out.breaks_rev) out.kind = OrbitBehaviorKind::Neither;
  else if (out.breaks_id) out.kind = OrbitBehaviorKind::LikeRev;
  else if (out.breaks_rev) out.kind = OrbitBehaviorKind::LikeId;
  return out;
}

std::string_view to_string(ImageRel r) noexcept {
  switch (r) {
    case ImageRel::Absent: return "Absent";
    case ImageRel::Lt: return "Lt";
    case ImageRel::Gt: return "Gt";
    case ImageRel::Inc: return "Inc";
    case ImageRel::Eq: return "Eq";
    case ImageRel::Mixed: return "Mixed";
  }
  return "?";
}

BetweenPattern behavior_between_orbits(const FinitePoset& src, std::span<const Element> consts, const FinitePoset& dst,
                                       const ElementMap& f, const OrbitLabel& x, const OrbitLabel& y) {
  check_map(src, dst, f);
  if (x == y) throw std::invalid_argument("behavior_between_orbits: blocks must differ");
  const auto blocks = orbit_partition(src, consts);
  const auto& xs = find_block(blocks, x);
  const auto& ys = find_block(blocks, y);
  auto as_image = [](PairRel r) {
    switch (r) {
      case PairRel::Lt: return ImageRel::Lt;
      case PairRel::Gt: return ImageRel::Gt;
      case PairRel::Inc: return ImageRel::Inc;
      case PairRel::Eq: return ImageRel::Eq;
    }
    return ImageRel::Mixed;
  };
  auto slot = [](PairRel r) { return r == PairRel::Lt ? 0 : r == PairRel::Gt ? 1 : 2; };

  BetweenPattern pat;
  for (Element a : xs)
    for (Element b : ys) {
      auto& cell = pat.image[slot(src.rel(a, b))];
      const ImageRel img = as_image(dst.rel(f[a], f[b]));
      if (cell == ImageRel::Absent) cell = img;
      else if (cell != img) cell = ImageRel::Mixed;
    }
  constexpr ImageRel same[3] = {ImageRel::Lt, ImageRel::Gt, ImageRel::Inc};
  pat.like_id = true;
  for (int i = 0; i < 3; ++i)
    if (pat.image[i] != ImageRel::Absent && pat.image[i] != same[i]) pat.like_id = false;
  return pat;
}

}  // namespace rpo
