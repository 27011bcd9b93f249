#include "rpo/canonical.hpp"

#include <algorithm>

namespace rpo {

std::string to_string(const OrbitLabel& l) {
  std::string s = "[";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) s += ",";
    s += to_string(l[i]);
  }
  return s + "]";
}

std::optional<OrbitLabel> parse_orbit_label(std::string_view s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') return std::nullopt;
  s = s.substr(1, s.size() - 2);
  OrbitLabel out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    auto r = parse_pair_rel(s.substr(0, comma));
    if (!r) return std::nullopt;
    out.push_back(*r);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

OrbitLabel orbit_label(const FinitePoset& p, std::span<const Element> consts, Element x) {
  OrbitLabel l;
  l.reserve(consts.size());
  for (Element c : consts) l.push_back(pair_rel(p, x, c));
  return l;
}

std::map<OrbitLabel, std::vector<Element>> orbit_partition(const FinitePoset& p, std::span<const Element> consts) {
  std::map<OrbitLabel, std::vector<Element>> blocks;
  for (Element x = 0; x < p.size(); ++x) blocks[orbit_label(p, consts, x)].push_back(x);
  return blocks;
}

bool is_constant_label(const OrbitLabel& l) { return std::find(l.begin(), l.end(), PairRel::Eq) != l.end(); }

std::string_view to_string(OrbitCompare c) noexcept {
  switch (c) {
    case OrbitCompare::StrictlyBelow: return "StrictlyBelow";
    case OrbitCompare::StrictlyAbove: return "StrictlyAbove";
    case OrbitCompare::Incomparable: return "Incomparable";
    case OrbitCompare::DivBelow: return "DivBelow";
    case OrbitCompare::DivAbove: return "DivAbove";
    case OrbitCompare::Same: return "Same";
  }
  return "?";
}

std::string_view to_string(OrderAxiom a) noexcept {
  switch (a) {
    case OrderAxiom::Reflexivity: return "reflexivity";
    case OrderAxiom::Antisymmetry: return "antisymmetry";
    case OrderAxiom::Transitivity: return "transitivity";
  }
  return "?";
}

namespace {

const std::vector<Element>& block_of(const std::map<OrbitLabel, std::vector<Element>>& blocks, const OrbitLabel& l) {
  auto it = blocks.find(l);
  if (it == blocks.end()) throw UnknownLabel("no block with label " + to_string(l));
  return it->second;
}

/// Some x ≤ y with x in X, y in Y.
std::optional<ElementPair> leq_witness(const FinitePoset& p, const std::vector<Element>& xs,
                                       const std::vector<Element>& ys) {
  for (Element x : xs)
    for (Element y : ys)
      if (x == y || p.less(x, y)) return ElementPair{x, y};
  return std::nullopt;
}

bool all_less(const FinitePoset& p, const std::vector<Element>& xs, const std::vector<Element>& ys) {
  for (Element x : xs)
    for (Element y : ys)
      if (!p.less(x, y)) return false;
  return true;
}

}  // namespace

OrbitCompare orbit_compare(const FinitePoset& p, std::span<const Element> consts, const OrbitLabel& x,
                           const OrbitLabel& y) {
  const auto blocks = orbit_partition(p, consts);
  const auto& xs = block_of(blocks, x);
  const auto& ys = block_of(blocks, y);
  if (x == y) return OrbitCompare::Same;
  if (all_less(p, xs, ys)) return OrbitCompare::StrictlyBelow;
  if (all_less(p, ys, xs)) return OrbitCompare::StrictlyAbove;
  const bool xy = leq_witness(p, xs, ys).has_value();
  const bool yx = leq_witness(p, ys, xs).has_value();
  if (xy && yx) throw PosetError("orbit_compare: blocks " + to_string(x) + " and " + to_string(y) + " are mutually below");
  if (xy) return OrbitCompare::DivBelow;
  if (yx) return OrbitCompare::DivAbove;
  return OrbitCompare::Incomparable;
}

std::size_t OrbitOrderReport::certified_violations() const {
  return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                [](const OrbitOrderViolation& v) { return v.certified; }));
}

OrbitOrderReport verify_orbit_order(const FinitePoset& p, std::span<const Element> consts,
                                    std::optional<std::span<const Element>> core) {
  const auto blocks = orbit_partition(p, consts);
  std::vector<OrbitLabel> labels;
  std::vector<const std::vector<Element>*> members;
  for (const auto& [l, ms] : blocks) {
    labels.push_back(l);
    members.push_back(&ms);
  }
  const std::size_t k = labels.size();

  Bits in_core(p.size());
  if (core) {
    for (Element e : *core) in_core.set(e);
  } else {
    in_core.set();
  }
  std::vector<bool> certified(k);
  for (std::size_t i = 0; i < k; ++i)
    certified[i] = std::any_of(members[i]->begin(), members[i]->end(), [&](Element e) { return in_core.test(e); });

  std::vector<std::vector<std::optional<ElementPair>>> leq(k, std::vector<std::optional<ElementPair>>(k));
  OrbitOrderReport rep;
  rep.blocks = k;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      leq[i][j] = leq_witness(p, *members[i], *members[j]);
      if (i != j && leq[i][j]) ++rep.relations;
    }

  for (std::size_t i = 0; i < k; ++i)
    if (!leq[i][i]) rep.violations.push_back({OrderAxiom::Reflexivity, {labels[i]}, {}, certified[i]});
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (leq[i][j] && leq[j][i])
        rep.violations.push_back({OrderAxiom::Antisymmetry,
                                  {labels[i], labels[j]},
                                  {*leq[i][j], *leq[j][i]},
                                  certified[i] || certified[j]});
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !leq[i][j]) continue;
      for (std::size_t l = 0; l < k; ++l) {
        if (l == i || l == j || !leq[j][l] || leq[i][l]) continue;
        rep.violations.push_back({OrderAxiom::Transitivity,
                                  {labels[i], labels[j], labels[l]},
                                  {*leq[i][j], *leq[j][l]},
                                  certified[i]});
      }
    }
  return rep;
}

}  // namespace rpo
