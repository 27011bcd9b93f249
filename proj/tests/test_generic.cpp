#include <doctest.h>

#include "oracles.hpp"
#include "rpo/generic.hpp"

#include <random>

using namespace rpo;

namespace {

std::size_t count_plain(const FinitePoset& p, std::vector<Element> base) {
  return consistent_extension_types(p, base, PlainLanguage{}).size();
}

}  // namespace

TEST_CASE("extension types over a point") {
  auto pt = FinitePoset::antichain(1);
  auto types = consistent_extension_types(pt, std::vector<Element>{0}, PlainLanguage{});
  REQUIRE(types.size() == 3);
  CHECK(types[0].rels == std::vector<PairRel>{PairRel::Lt});
  CHECK(types[1].rels == std::vector<PairRel>{PairRel::Gt});
  CHECK(types[2].rels == std::vector<PairRel>{PairRel::Inc});
}

TEST_CASE("extension types over a 2-chain") {
  auto c2 = FinitePoset::chain(2);
  CHECK(count_plain(c2, {0, 1}) == 6);
  CHECK(oracle::count_plain_extensions(oracle::of(c2), {0, 1}) == 6);
  // y < a, y > b would force b < a.
  CHECK(count_plain(FinitePoset::antichain(2), {0, 1}) == 7);
  CHECK(count_plain(c2, {}) == 1);
}

TEST_CASE("plain extension counts agree with the closure oracle") {
  std::mt19937_64 rng(3);
  for (int s = 0; s < 120; ++s) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<ElementPair> pairs;
    for (Element i = 0; i < n; ++i)
      for (Element j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) pairs.emplace_back(i, j);
    auto p = make_poset(n, pairs);
    std::vector<Element> base;
    for (Element e = 0; e < n; ++e)
      if (rng() % 2) base.push_back(e);
    if (base.size() > 4) base.resize(4);
    CHECK(count_plain(p, base) == oracle::count_plain_extensions(oracle::of(p), base));
  }
}

TEST_CASE("upset extensions respect upward closure") {
  auto pt = FinitePoset::antichain(1);
  UpsetLanguage lang{make_bits(1, {0})};
  ExtensionType above_in{{0}, {PairRel::Gt}, true, std::nullopt};
  ExtensionType above_out{{0}, {PairRel::Gt}, false, std::nullopt};
  CHECK(is_consistent(pt, above_in, lang));
  CHECK_FALSE(is_consistent(pt, above_out, lang));
  // Three relations, with in_upset forced for Gt: Lt x2, Gt x1, Inc x2.
  CHECK(consistent_extension_types(pt, std::vector<Element>{0}, lang).size() == 5);
}

TEST_CASE("ordered extensions count slots") {
  auto c2 = FinitePoset::chain(2);
  OrderedLanguage lang{LinearOrder::identity(2)};
  // below both: slot 0; between: slot 1; above: slot 2; ⊥ both: 3 slots;
  // y<b, y⊥a: slots 0,1; y>a, y⊥b: slots 1,2.
  CHECK(consistent_extension_types(c2, std::vector<Element>{0, 1}, lang).size() == 10);
}

TEST_CASE("realize_extension") {
  auto c2 = FinitePoset::chain(2);
  auto up = realize_extension(c2, ExtensionType{{0}, {PairRel::Gt}, {}, {}});
  CHECK(up.less(0, 2));
  CHECK(up.rel(2, 1) == PairRel::Inc);

  auto down = realize_extension(c2, ExtensionType{{1}, {PairRel::Lt}, {}, {}});
  CHECK(down.less(2, 1));
  CHECK(down.rel(2, 0) == PairRel::Inc);

  // y < a and y > b with a < b.
  CHECK_THROWS_AS(realize_extension(c2, ExtensionType{{0, 1}, {PairRel::Lt, PairRel::Gt}, {}, {}}), InconsistentExtension);
  CHECK_NOTHROW(realize_extension(c2, ExtensionType{{0, 1}, {PairRel::Gt, PairRel::Lt}, {}, {}}));
}

TEST_CASE("certify_extension") {
  Structure c3{FinitePoset::chain(3), PlainLanguage{}};
  const std::vector<Element> all{0, 1, 2};
  auto rep = certify_extension(c3, all, 1);
  CHECK_FALSE(rep.certified());
  bool middle_inc = false;
  for (const auto& d : rep.deficiencies) middle_inc |= d.base == std::vector<Element>{1} && d.rels[0] == PairRel::Inc;
  CHECK(middle_inc);

  // Only the empty base is left; its single type asks for any element at all.
  auto empty = certify_extension(c3, std::vector<Element>{}, 2);
  CHECK(empty.certified());
  CHECK(empty.bases_examined == 1);
  CHECK(empty.witnesses.size() == 1);
  CHECK_FALSE(certify_extension(Structure{}, std::vector<Element>{}, 2).certified());
}

TEST_CASE("generate_generic") {
  SUBCASE("one round of depth 1 from a point") {
    GenerateOptions o;
    o.depth = 1;
    o.rounds = 1;
    o.start = Structure{FinitePoset::antichain(1), PlainLanguage{}};
    auto g = generate_generic(o);
    const auto& p = g.structure.poset;
    CHECK(p.size() == 4);
    int lt = 0, gt = 0, inc = 0;
    for (Element x = 1; x < p.size(); ++x) {
      lt += p.rel(x, 0) == PairRel::Lt;
      gt += p.rel(x, 0) == PairRel::Gt;
      inc += p.rel(x, 0) == PairRel::Inc;
    }
    CHECK(lt == 1);
    CHECK(gt == 1);
    CHECK(inc == 1);
    CHECK(g.certificate.certified());
  }

  SUBCASE("depth 2 in every language, re-certified") {
    for (auto lang : {LanguageKind::Plain, LanguageKind::WithUpset, LanguageKind::Ordered}) {
      GenerateOptions o;
      o.depth = 2;
      o.seed = 4;
      o.language = lang;
      auto g = generate_generic(o);
      CHECK_NOTHROW(validate_language(g.structure.poset, g.structure.language));
      auto again = certify_extension(g.structure, g.certificate.core, 2);
      CHECK(again.certified());
      CHECK(witnesses_valid(g.structure, g.certificate));
      CHECK(oracle::is_strict_order(oracle::of(g.structure.poset)));
    }
  }

  SUBCASE("deterministic for a fixed seed") {
    GenerateOptions o;
    o.depth = 2;
    o.seed = 9;
    auto a = generate_generic(o);
    auto b = generate_generic(o);
    CHECK(a.structure == b.structure);
    CHECK(a.certificate == b.certificate);
  }

  SUBCASE("element budget") {
    GenerateOptions o;
    o.depth = 2;
    o.max_elements = 10;
    CHECK_THROWS_AS(generate_generic(o), RoundLimitExceeded);
    o.depth = 0;
    CHECK_THROWS_AS(generate_generic(o), std::invalid_argument);
  }
}

TEST_CASE("subsets_up_to") {
  const std::vector<Element> pool{0, 1, 2};
  auto s = subsets_up_to(pool, 2);
  CHECK(s.size() == 7);
  CHECK(s.front().empty());
  CHECK(s[1] == std::vector<Element>{0});
  CHECK(s.back() == std::vector<Element>{1, 2});
}
