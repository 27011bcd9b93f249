#include <doctest.h>

#include "oracles.hpp"
#include "rpo/reducts.hpp"
#include "rpo/transforms.hpp"

#include <random>

using namespace rpo;

namespace {

FinitePoset v_poset() { return make_poset(3, {{0, 1}, {0, 2}}); }

struct Sample {
  FinitePoset p;
  Bits f;
};

Sample random_sample(std::mt19937_64& rng, std::size_t max_n) {
  const std::size_t n = 1 + rng() % max_n;
  std::vector<ElementPair> pairs;
  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (rng() % 4 == 0) pairs.emplace_back(i, j);
  // Relabel so the order is not always index-increasing.
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [i, j] : pairs) i = perm[i], j = perm[j];
  auto p = make_poset(n, pairs);
  Bits seed(n);
  for (Element e = 0; e < n; ++e)
    if (rng() % 5 == 0) seed.set(e);
  return {p, up_closure(p, seed)};
}

}  // namespace

TEST_CASE("reverse") {
  CHECK(reverse(FinitePoset::chain(2)) == make_poset(2, {{1, 0}}));
  CHECK(reverse(FinitePoset::antichain(3)) == FinitePoset::antichain(3));
  CHECK(are_isomorphic(reverse(family({FamilyKind::S, 3, 2})), family({FamilyKind::T, 3, 2})));
  auto v = v_poset();
  CHECK(reverse(reverse(v)) == v);
}

TEST_CASE("turn examples") {
  auto c2 = FinitePoset::chain(2);
  auto t = turn(c2, make_bits(2, {1}));
  CHECK(t.rel(0, 1) == PairRel::Inc);

  auto a2 = FinitePoset::antichain(2);
  CHECK(turn(a2, make_bits(2, {1})).less(1, 0));

  auto v = v_poset();
  CHECK(turn(v, Bits(3)) == v);
  CHECK(turn(v, make_bits(3, {0, 1, 2})) == v);

  CHECK_THROWS_AS(turn(c2, make_bits(2, {0})), RoleError);
}

TEST_CASE("turn agrees with the raw-clause oracle and keeps triple classes") {
  std::mt19937_64 rng(17);
  for (int s = 0; s < 300; ++s) {
    auto [p, f] = random_sample(rng, 9);
    std::vector<bool> fv(p.size());
    for (Element e = 0; e < p.size(); ++e) fv[e] = f.test(e);
    auto t = turn(p, f);
    const auto m = oracle::turn(oracle::of(p), fv);
    CHECK(oracle::of(t) == m);
    CHECK(oracle::is_strict_order(m));
    for (Element a = 0; a < p.size(); ++a)
      for (Element b = 0; b < p.size(); ++b)
        for (Element c = 0; c < p.size(); ++c)
          if (a != b && b != c && a != c) REQUIRE(classify_triple(p, a, b, c) == classify_triple(t, a, b, c));

    RotationPartition part{Bits(p.size()), ~f, f};
    CHECK(rotate(p, part) == t);
  }
}

TEST_CASE("turned_rel clause table") {
  using R = PairRel;
  CHECK(turned_rel(R::Lt, true, true) == R::Lt);
  CHECK(turned_rel(R::Lt, false, false) == R::Lt);
  CHECK(turned_rel(R::Inc, true, false) == R::Lt);
  CHECK(turned_rel(R::Lt, true, false) == R::Lt);
  CHECK(turned_rel(R::Gt, true, false) == R::Inc);
  CHECK(turned_rel(R::Lt, false, true) == R::Inc);
  CHECK(turned_rel(R::Inc, false, true) == R::Gt);
  CHECK(turned_rel(R::Eq, true, true) == R::Eq);
}

TEST_CASE("rotate") {
  auto v = v_poset();
  RotationPartition id{Bits(3), make_bits(3, {0, 1, 2}), Bits(3)};
  CHECK(rotate(v, id) == v);

  auto c3 = FinitePoset::chain(3);
  RotationPartition xyz{make_bits(3, {0}), make_bits(3, {1}), make_bits(3, {2})};
  auto r = rotate(c3, xyz);
  CHECK(r.less(2, 0));
  CHECK(r.rel(1, 0) == PairRel::Inc);
  CHECK(r.rel(2, 1) == PairRel::Inc);
  // Single-edge z < x with y ⊥ both: a cyc clause on (z, x, y).
  CHECK(classify_triple(r, 2, 0, 1) == TripleClass::Cyc);
  CHECK(classify_triple(c3, 0, 1, 2) == TripleClass::Cyc);

  RotationPartition overlap{make_bits(3, {0}), make_bits(3, {0, 1}), make_bits(3, {2})};
  CHECK_THROWS_AS(rotate(c3, overlap), PartitionError);
  RotationPartition short_cover{make_bits(3, {0}), Bits(3), make_bits(3, {2})};
  CHECK_THROWS_AS(rotate(c3, short_cover), PartitionError);
  RotationPartition x_not_down{make_bits(3, {1}), make_bits(3, {0}), make_bits(3, {2})};
  CHECK_THROWS_AS(rotate(c3, x_not_down), PartitionError);
  RotationPartition z_not_up{Bits(3), make_bits(3, {0, 2}), make_bits(3, {1})};
  CHECK_THROWS_AS(rotate(c3, z_not_up), PartitionError);
  // x ⊥ z is ruled out.
  auto a2 = FinitePoset::antichain(2);
  RotationPartition apart{make_bits(2, {0}), Bits(2), make_bits(2, {1})};
  CHECK_THROWS_AS(rotate(a2, apart), PartitionError);
}

TEST_CASE("find_separating_upset") {
  auto a2 = FinitePoset::antichain(2);
  CHECK(find_separating_upset(a2, make_bits(2, {0}), make_bits(2, {1})) == make_bits(2, {0}));
  CHECK_THROWS_AS(find_separating_upset(FinitePoset::chain(2), make_bits(2, {0}), make_bits(2, {1})), NotSeparable);
  auto v = v_poset();
  CHECK(find_separating_upset(v, make_bits(3, {1}), make_bits(3, {0, 2})) == make_bits(3, {1}));
  CHECK(find_separating_upset(v, make_bits(3, {1}), Bits(3), make_bits(3, {2})) == make_bits(3, {1, 2}));
}

TEST_CASE("compose_turns_check") {
  SUBCASE("empty filter composes to the identity") {
    auto v = v_poset();
    auto rep = compose_turns_check(v, Bits(3));
    CHECK(rep.composed == v);
    CHECK(rep.deviations.empty());
    CHECK(rep.partition.y == make_bits(3, {0, 1, 2}));
  }

  SUBCASE("two-element chain") {
    auto c2 = FinitePoset::chain(2);
    auto rep = compose_turns_check(c2, make_bits(2, {1}));
    CHECK(rep.deviations.empty());
    CHECK(rep.partition.x.none());
    CHECK(rep.partition.y == make_bits(2, {0}));
    CHECK(rep.partition.z == make_bits(2, {1}));
    CHECK(rep.composed == rotate(c2, rep.partition));
  }

  SUBCASE("three-block rotation on a chain") {
    auto c3 = FinitePoset::chain(3);
    ComposeStrategy st{make_bits(3, {0}), SecondTurnRule::ComplementOfIdeal};
    auto rep = compose_turns_check(c3, make_bits(3, {2}), st);
    CHECK(rep.deviations.empty());
    CHECK(rep.composed == rotate(c3, {make_bits(3, {0}), make_bits(3, {1}), make_bits(3, {2})}));

    st.rule = SecondTurnRule::AsPrinted;
    auto printed = compose_turns_check(c3, make_bits(3, {2}), st);
    CHECK(printed.composed == c3);
    CHECK_FALSE(printed.deviations.empty());
  }

  SUBCASE("random samples with the ideal below the filter") {
    std::mt19937_64 rng(8);
    int checked = 0;
    for (int s = 0; s < 200; ++s) {
      auto [p, f] = random_sample(rng, 8);
      if (f.none()) continue;
      // Largest ideal below every element of F.
      Bits x(p.size());
      for (Element e = 0; e < p.size(); ++e) {
        bool below_all = !f.test(e);
        for (Element z : members(f)) below_all = below_all && p.less(e, z);
        if (below_all) x.set(e);
      }
      auto rep = compose_turns_check(p, f, ComposeStrategy{x, SecondTurnRule::ComplementOfIdeal});
      CHECK(rep.deviations.empty());
      ++checked;
    }
    CHECK(checked > 50);
  }
}
