#include "rpo/canonical.hpp"

#include <algorithm>
#include <tuple>

namespace rpo {

CleanlinessReport check_cleanness(const OrderedPoset& op, std::span<const Element> consts, std::span<const Element> s) {
  std::map<Element, OrbitLabel> label;
  for (Element e : s) label.emplace(e, orbit_label(op.poset, consts, e));

  // Pair type over the constants -> first pair seen and its ≺ direction.
  using Key = std::tuple<PairRel, OrbitLabel, OrbitLabel>;
  std::map<Key, std::pair<ElementPair, bool>> seen;
  CleanlinessReport rep;
  for (Element a : s)
    for (Element b : s) {
      if (a == b) continue;
      ++rep.pairs_checked;
      const PairRel r = op.poset.rel(a, b);
      // Incomparable pairs inside one block match their own swap, so any direction is fine.
      if (r == PairRel::Inc && label[a] == label[b]) continue;
      const bool dir = op.prec.precedes(a, b);
      auto [it, fresh] = seen.try_emplace(Key{r, label[a], label[b]}, ElementPair{a, b}, dir);
      if (!fresh && it->second.second != dir && rep.clean) {
        rep.clean = false;
        rep.witness = std::array<ElementPair, 2>{it->second.first, ElementPair{a, b}};
      }
    }
  return rep;
}

namespace {

struct Block {
  OrbitLabel label;
  std::vector<Element> members;
  std::vector<Element> candidates;  ///< representative choices
  bool constant;
};

}  // namespace

SkeletonReport build_clean_skeleton(const OrderedPoset& op, std::span<const Element> consts, std::size_t depth,
                                    std::optional<std::span<const Element>> core) {
  const FinitePoset& p = op.poset;
  const std::size_t n = p.size();
  if (op.prec.size() != n) throw RoleError("build_clean_skeleton: order width does not match poset size");
  Bits in_core(n);
  if (core) {
    for (Element e : *core) in_core.set(e);
  } else {
    in_core.set();
  }

  std::vector<Block> blocks;
  for (auto& [l, ms] : orbit_partition(p, consts)) {
    Block b{l, ms, {}, is_constant_label(l)};
    for (Element e : ms)
      if (in_core.test(e)) b.candidates.push_back(e);
    if (b.candidates.empty()) b.candidates = ms;
    blocks.push_back(std::move(b));
  }
  const std::size_t k = blocks.size();
  if (k > 16) throw std::invalid_argument("build_clean_skeleton: too many blocks");

  // prefix[b][r] = members of block b with rank < r.
  std::vector<std::vector<std::size_t>> prefix(k, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t b = 0; b < k; ++b) {
    for (Element e : blocks[b].members) ++prefix[b][op.prec.rank(e) + 1];
    for (std::size_t r = 0; r < n; ++r) prefix[b][r + 1] += prefix[b][r];
  }
  const Element least = n ? op.prec.sequence().front() : 0;
  // Members of block b strictly between ranks lo (exclusive, -1 for none) and hi.
  auto between = [&](std::size_t b, std::ptrdiff_t lo, std::size_t hi) -> std::size_t {
    const std::size_t from = static_cast<std::size_t>(lo + 1);
    return hi > from ? prefix[b][hi] - prefix[b][from] : 0;
  };
  auto lower_for_first = [&](Element r1) -> std::ptrdiff_t {
    return r1 == least ? -1 : static_cast<std::ptrdiff_t>(op.prec.rank(least));
  };

  // Score: (nonempty non-constant slices, total slice size).
  using Score = std::pair<std::size_t, std::size_t>;
  const Score none{0, 0};
  const std::size_t full = (std::size_t{1} << k) - 1;
  // best[mask][rank of last rep] and the choice that achieved it.
  std::map<std::pair<std::size_t, std::size_t>, std::optional<Score>> memo;
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, Element>> choice;

  auto gain = [&](std::size_t b, std::ptrdiff_t lo, Element r) -> Score {
    if (blocks[b].constant) return none;
    const std::size_t g = between(b, lo, op.prec.rank(r));
    return {g > 0, g};
  };
  auto add = [](Score a, Score b) { return Score{a.first + b.first, a.second + b.second}; };

  // Best completion from state (mask, last rank); nullopt if infeasible.
  auto solve = [&](auto&& self, std::size_t mask, std::size_t last) -> std::optional<Score> {
    if (mask == full) return none;
    const auto key = std::make_pair(mask, last);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::optional<Score> best;
    for (std::size_t b = 0; b < k; ++b) {
      if (mask >> b & 1) continue;
      for (Element r : blocks[b].candidates) {
        const std::size_t rr = op.prec.rank(r);
        if (rr <= last) continue;
        auto rest = self(self, mask | (std::size_t{1} << b), rr);
        if (!rest) continue;
        const Score s = add(gain(b, static_cast<std::ptrdiff_t>(last), r), *rest);
        if (!best || s > *best) {
          best = s;
          choice[key] = {b, r};
        }
      }
    }
    memo[key] = best;
    return best;
  };

  // The first block is handled separately because its lower bound is r_0.
  std::optional<Score> best;
  std::pair<std::size_t, Element> first{};
  for (std::size_t b = 0; b < k; ++b)
    for (Element r : blocks[b].candidates) {
      auto rest = solve(solve, std::size_t{1} << b, op.prec.rank(r));
      if (!rest) continue;
      const Score s = add(gain(b, lower_for_first(r), r), *rest);
      if (!best || s > *best) {
        best = s;
        first = {b, r};
      }
    }

  SkeletonReport rep;
  if (k == 0) return rep;
  if (!best) throw EmptyBlock("build_clean_skeleton: no ≺-increasing choice of representatives", {});

  std::vector<std::pair<std::size_t, Element>> picks{first};
  std::size_t mask = std::size_t{1} << first.first;
  while (mask != full) {
    const auto c = choice.at({mask, op.prec.rank(picks.back().second)});
    picks.push_back(c);
    mask |= std::size_t{1} << c.first;
  }

  const Element r1 = picks.front().second;
  if (r1 != least) rep.r0 = least;
  std::ptrdiff_t lo = lower_for_first(r1);
  std::vector<OrbitLabel> empty;
  for (auto [b, r] : picks) {
    rep.order.push_back(blocks[b].label);
    rep.representatives.push_back(r);
    const std::size_t hi = op.prec.rank(r);
    if (!blocks[b].constant) {
      std::vector<Element> slice;
      for (Element e : blocks[b].members) {
        const auto er = static_cast<std::ptrdiff_t>(op.prec.rank(e));
        if (er > lo && er < static_cast<std::ptrdiff_t>(hi)) slice.push_back(e);
      }
      if (slice.empty()) empty.push_back(blocks[b].label);
      rep.slices.emplace(blocks[b].label, std::move(slice));
    }
    lo = static_cast<std::ptrdiff_t>(hi);
  }
  if (!empty.empty()) {
    std::string msg = "build_clean_skeleton: empty slice for";
    for (const auto& l : empty) msg += " " + to_string(l);
    throw EmptyBlock(msg, std::move(empty));
  }

  for (const auto& [l, slice] : rep.slices) rep.members.insert(rep.members.end(), slice.begin(), slice.end());
  rep.members.insert(rep.members.end(), consts.begin(), consts.end());
  std::sort(rep.members.begin(), rep.members.end());
  rep.members.erase(std::unique(rep.members.begin(), rep.members.end()), rep.members.end());

  rep.cleanness = check_cleanness(op, consts, rep.members);

  std::vector<Element> core_idx;
  for (std::size_t i = 0; i < rep.members.size(); ++i)
    if (in_core.test(rep.members[i])) core_idx.push_back(i);
  rep.extension = certify_extension(Structure{induced(p, rep.members), PlainLanguage{}}, core_idx, depth);
  return rep;
}

}  // namespace rpo
