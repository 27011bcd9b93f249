#include <doctest.h>

#include "oracles.hpp"
#include "rpo/reducts.hpp"
#include "rpo/transforms.hpp"

#include <random>

using namespace rpo;

namespace {

constexpr PairRel Lt = PairRel::Lt;
constexpr PairRel Gt = PairRel::Gt;
constexpr PairRel Inc = PairRel::Inc;

int code(PairRel r) { return r == Lt ? 0 : r == Gt ? 1 : 2; }

oracle::Matrix matrix_of(const TripleType& t) { return oracle::triple_matrix(code(t.r12), code(t.r13), code(t.r23)); }

}  // namespace

TEST_CASE("enumerate_triple_types matches the 27-assignment oracle") {
  auto types = enumerate_triple_types();
  auto brute = oracle::triple_types();
  REQUIRE(types.size() == 19);
  REQUIRE(brute.size() == 19);
  for (std::size_t i = 0; i < types.size(); ++i) {
    CHECK(code(types[i].r12) == brute[i][0]);
    CHECK(code(types[i].r13) == brute[i][1]);
    CHECK(code(types[i].r23) == brute[i][2]);
  }
  CHECK(types.front() == TripleType{Lt, Lt, Lt});
  CHECK_FALSE(is_valid_triple_type({Lt, Inc, Lt}));
}

TEST_CASE("classification against the oracle") {
  int pari = 0, cyc = 0, cycp = 0;
  for (const auto& t : enumerate_triple_types()) {
    const auto m = matrix_of(t);
    const auto c = classify_triple_type(t);
    const TripleClass expected = oracle::pari(m) ? TripleClass::Pari : oracle::cyc(m) ? TripleClass::Cyc : TripleClass::CycPrime;
    CHECK_MESSAGE(c == expected, to_string(t));
    pari += c == TripleClass::Pari;
    cyc += c == TripleClass::Cyc;
    cycp += c == TripleClass::CycPrime;
  }
  CHECK(pari == 7);
  CHECK(cyc == 6);
  CHECK(cycp == 6);
}

TEST_CASE("classification examples") {
  CHECK(classify_triple_type({Lt, Lt, Lt}) == TripleClass::Cyc);
  CHECK(classify_triple_type({Inc, Inc, Inc}) == TripleClass::Pari);
  CHECK(classify_triple_type({Lt, Inc, Inc}) == TripleClass::Cyc);
  // Λ: b < a, c < a, b ⊥ c.
  CHECK(classify_triple_type({Gt, Gt, Inc}) == TripleClass::Pari);

  auto c3 = FinitePoset::chain(3);
  CHECK(classify_triple(c3, 1, 2, 0) == TripleClass::Cyc);
  CHECK(classify_triple(c3, 2, 1, 0) == TripleClass::CycPrime);
  CHECK_FALSE(classify_triple(c3, 1, 1, 0).has_value());
  CHECK_THROWS_AS(classify_triple(c3, 0, 1, 3), std::out_of_range);
}

TEST_CASE("cyc is invariant under cyclic shifts and swapped by transpositions") {
  for (const auto& t : enumerate_triple_types()) {
    const auto c = classify_triple_type(t);
    CHECK(classify_triple_type(permuted(t, {1, 2, 0})) == c);
    CHECK(classify_triple_type(permuted(t, {2, 0, 1})) == c);
    const auto swapped = classify_triple_type(permuted(t, {1, 0, 2}));
    if (c == TripleClass::Pari) CHECK(swapped == TripleClass::Pari);
    if (c == TripleClass::Cyc) CHECK(swapped == TripleClass::CycPrime);
    if (c == TripleClass::CycPrime) CHECK(swapped == TripleClass::Cyc);
  }
}

TEST_CASE("relation tables") {
  auto a2 = FinitePoset::antichain(2);
  CHECK(relation_table(a2, ReductRelation::Bot) == std::vector<std::vector<Element>>{{0, 1}, {1, 0}});
  auto c3 = FinitePoset::chain(3);
  CHECK(relation_table(c3, ReductRelation::Bot).empty());
  CHECK(relation_table(c3, ReductRelation::Pari).empty());
  CHECK(relation_table(c3, ReductRelation::Cyc) == std::vector<std::vector<Element>>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(parse_reduct_relation("pari") == ReductRelation::Pari);
  CHECK_FALSE(parse_reduct_relation("xyz").has_value());
}

TEST_CASE("relation tables agree with the oracle on random posets") {
  std::mt19937_64 rng(21);
  for (int s = 0; s < 40; ++s) {
    const std::size_t n = 3 + rng() % 4;
    std::vector<ElementPair> pairs;
    for (Element i = 0; i < n; ++i)
      for (Element j = i + 1; j < n; ++j)
        if (rng() % 2) pairs.emplace_back(i, j);
    auto p = make_poset(n, pairs);
    const auto m = oracle::of(p);
    std::vector<std::vector<Element>> cyc, pari;
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) {
          if (a == b || b == c || a == c) continue;
          oracle::Matrix t = oracle::empty(3);
          const Element idx[3] = {a, b, c};
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t[i][j] = m[idx[i]][idx[j]];
          if (oracle::cyc(t)) cyc.push_back({a, b, c});
          if (oracle::pari(t)) pari.push_back({a, b, c});
        }
    CHECK(relation_table(p, ReductRelation::Cyc) == cyc);
    CHECK(relation_table(p, ReductRelation::Pari) == pari);
  }
}

TEST_CASE("reverse switches cyc and cyc' and fixes pari") {
  CHECK(classify_triple_type(reversed({Inc, Inc, Inc})) == TripleClass::Pari);
  CHECK(classify_triple_type(reversed({Lt, Inc, Inc})) == TripleClass::CycPrime);
  for (const auto& t : enumerate_triple_types()) {
    const auto c = classify_triple_type(t);
    const auto r = classify_triple_type(reversed(t));
    if (c == TripleClass::Pari) CHECK(r == TripleClass::Pari);
    else CHECK(r != c);
  }
}

TEST_CASE("orbit list crosscheck") {
  auto corrected = orbit_list_crosscheck(ListReading::Corrected);
  CHECK(corrected.types == 19);
  CHECK(corrected.pari == 7);
  CHECK(corrected.cyc == 6);
  CHECK(corrected.cyc_prime == 6);
  CHECK(corrected.mismatches.empty());

  auto literal = orbit_list_crosscheck(ListReading::Literal);
  CHECK(literal.mismatches.size() == 6);

  auto listed = listed_classes({Gt, Gt, Inc}, ListReading::Corrected);
  CHECK(listed == std::vector<TripleClass>{TripleClass::Pari});
}

TEST_CASE("dropping any cyc clause changes the classification") {
  for (int k = 0; k < 6; ++k) {
    const auto mask = static_cast<std::uint8_t>(kAllCycClauses & ~(1u << k));
    int changed = 0;
    for (const auto& t : enumerate_triple_types()) changed += classify_triple_type(t, mask) != classify_triple_type(t);
    CHECK_MESSAGE(changed == 1, "clause " << k);
  }
}
