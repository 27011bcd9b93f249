#include "rpo/transforms.hpp"

namespace rpo {

namespace {

void require_width(const FinitePoset& p, const Bits& s, const char* what) {
  if (s.size() != p.size())
    throw RoleError(std::string(what) + ": subset width " + std::to_string(s.size()) + " does not match poset size " +
                    std::to_string(p.size()));
}

FinitePoset from_rel_fn(std::size_t n, auto&& rel) {
  std::vector<Bits> up(n, Bits(n));
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j)
      if (i != j && rel(i, j) == PairRel::Lt) up[i].set(j);
  return FinitePoset::from_rows(std::move(up));
}

}  // namespace

FinitePoset reverse(const FinitePoset& p) {
  std::vector<Bits> up(p.size());
  for (Element i = 0; i < p.size(); ++i) up[i] = p.below(i);
  return FinitePoset::from_rows(std::move(up));
}

PairRel turned_rel(PairRel r, bool x_in_f, bool y_in_f, std::uint8_t mask) {
  if (r == PairRel::Eq) return r;
  if (x_in_f == y_in_f) {
    const bool kept = x_in_f ? (mask & 1) : (mask & 2);
    return kept ? r : PairRel::Inc;
  }
  if (!(mask & 4)) return PairRel::Inc;
  // The F-side element goes below the I-side one unless it was above it.
  if (x_in_f) return r == PairRel::Gt ? PairRel::Inc : PairRel::Lt;
  return r == PairRel::Lt ? PairRel::Inc : PairRel::Gt;
}

FinitePoset turn(const FinitePoset& p, const Bits& upset, std::uint8_t clause_mask) {
  require_width(p, upset, "turn");
  if (!check_role(p, upset, Role::UpClosed)) throw RoleError("turn: set is not upward closed");
  return from_rel_fn(p.size(), [&](Element i, Element j) {
    return turned_rel(p.rel(i, j), upset.test(i), upset.test(j), clause_mask);
  });
}

void validate_partition(const FinitePoset& p, const RotationPartition& part) {
  const std::size_t n = p.size();
  if (part.x.size() != n || part.y.size() != n || part.z.size() != n)
    throw PartitionError("rotate: class width does not match poset size");
  if (part.x.intersects(part.y) || part.x.intersects(part.z) || part.y.intersects(part.z))
    throw PartitionError("rotate: classes overlap");
  if ((part.x | part.y | part.z).count() != n) throw PartitionError("rotate: classes do not cover the poset");
  if (!check_role(p, part.x, Role::DownClosed)) throw PartitionError("rotate: X is not downward closed");
  if (!check_role(p, part.z, Role::UpClosed)) throw PartitionError("rotate: Z is not upward closed");
  for (auto x = part.x.find_first(); x != Bits::npos; x = part.x.find_next(x))
    if (!part.z.is_subset_of(p.above(x)))
      throw PartitionError("rotate: " + std::to_string(x) + " in X is not below every element of Z");
}

FinitePoset rotate(const FinitePoset& p, const RotationPartition& part) {
  validate_partition(p, part);
  auto cls = [&](Element e) { return part.x.test(e) ? 0 : part.y.test(e) ? 1 : 2; };
  // Relation of the lower-class element u (class cu) to v (class cv), cu < cv.
  auto cross = [](int cu, int cv, PairRel r) {
    if (cu == 0 && cv == 2) return PairRel::Gt;
    return r == PairRel::Inc ? PairRel::Gt : PairRel::Inc;
  };
  auto rel = [&](Element i, Element j) {
    const int ci = cls(i), cj = cls(j);
    const PairRel r = p.rel(i, j);
    if (ci == cj) return r;
    return ci < cj ? cross(ci, cj, r) : converse(cross(cj, ci, converse(r)));
  };
  try {
    return from_rel_fn(p.size(), rel);
  } catch (const AxiomError& e) {
    throw ClosureError(std::string("rotate: rewritten relation is not an order: ") + e.what());
  }
}

Bits find_separating_upset(const FinitePoset& p, const Bits& inside, const Bits& outside, const std::optional<Bits>& widen) {
  require_width(p, inside, "find_separating_upset");
  require_width(p, outside, "find_separating_upset");
  if (inside.intersects(outside)) throw std::invalid_argument("find_separating_upset: inside and outside overlap");
  Bits seed = inside;
  if (widen) {
    require_width(p, *widen, "find_separating_upset");
    seed |= *widen;
  }
  Bits f = up_closure(p, seed);
  if (f.intersects(outside)) {
    const auto bad = (f & outside).find_first();
    throw NotSeparable("find_separating_upset: " + std::to_string(bad) + " lies above the chosen set");
  }
  return f;
}

std::string_view to_string(SecondTurnRule r) noexcept {
  return r == SecondTurnRule::ComplementOfIdeal ? "complement-of-ideal" : "as-printed";
}

std::size_t ComposeReport::deviations_on_core() const {
  std::size_t k = 0;
  for (const auto& d : deviations) k += d.in_core;
  return k;
}

ComposeReport compose_turns_check(const FinitePoset& p, const Bits& upset, const ComposeStrategy& strategy,
                                  std::optional<std::span<const Element>> core) {
  const std::size_t n = p.size();
  require_width(p, upset, "compose_turns_check");
  Bits x = strategy.ideal.value_or(Bits(n));
  require_width(p, x, "compose_turns_check");

  RotationPartition part{x, ~(x | upset), upset};
  try {
    validate_partition(p, part);
  } catch (const PartitionError& e) {
    throw StrategyFailure(std::string("compose_turns_check: ") + e.what());
  }
  const FinitePoset q = turn(p, upset);

  const Bits seed = strategy.rule == SecondTurnRule::ComplementOfIdeal ? (part.y | part.z) : (part.x | part.y);
  const Bits avoid = strategy.rule == SecondTurnRule::ComplementOfIdeal ? part.x : part.z;
  const Bits second = up_closure(q, seed);
  if (second.intersects(avoid)) throw StrategyFailure("compose_turns_check: no admissible second upset");

  ComposeReport rep{part, second, turn(q, second), {}, 0};
  const FinitePoset expected = rotate(p, part);

  Bits in_core(n);
  if (core) {
    for (Element e : *core) in_core.set(e);
  } else {
    in_core.set();
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b) {
      ++rep.pairs_checked;
      const PairRel want = expected.rel(a, b), got = rep.composed.rel(a, b);
      if (want != got) rep.deviations.push_back({a, b, want, got, in_core.test(a) && in_core.test(b)});
    }
  return rep;
}

}  // namespace rpo
