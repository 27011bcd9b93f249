#include <doctest.h>

#include "rpo/io.hpp"

#include <filesystem>

using namespace rpo;
using nlohmann::json;

TEST_CASE("parse poset text") {
  auto doc = parse_poset_text(R"({"n":2,"lt":[[0,1]]})");
  CHECK(doc.structure.poset == FinitePoset::chain(2));
  CHECK(std::holds_alternative<PlainLanguage>(doc.structure.language));

  CHECK_THROWS_AS(parse_poset_text(R"({"n":2,"lt":[[0,1],[1,0]]})"), AxiomError);
  CHECK_THROWS_AS(parse_poset_text(R"({"n":3,"lt":[[0,1],[1,2]]})"), AxiomError);
  CHECK_NOTHROW(parse_poset_text(R"({"n":3,"lt":[[0,1],[1,2],[0,2]]})"));

  CHECK_THROWS_AS(parse_poset_text("{"), ParseError);
  CHECK_THROWS_AS(parse_poset_text(R"({"lt":[]})"), ParseError);
  CHECK_THROWS_AS(parse_poset_text(R"({"n":2,"lt":[[0]]})"), ParseError);
  CHECK_THROWS_AS(parse_poset_text(R"({"n":2,"lt":[],"upset":[2]})"), ParseError);
  CHECK_THROWS_AS(parse_poset_text(R"({"n":2,"lt":[],"order":[0,0]})"), ParseError);
  CHECK_THROWS_AS(parse_poset_text(R"({"n":2,"lt":[],"upset":[],"order":[0,1]})"), ParseError);
}

TEST_CASE("annotations") {
  auto up = parse_poset_text(R"({"n":2,"lt":[[0,1]],"upset":[1],"core":[0]})");
  CHECK(std::get<UpsetLanguage>(up.structure.language).upset == make_bits(2, {1}));
  CHECK(up.core == std::vector<Element>{0});
  CHECK_THROWS_AS(parse_poset_text(R"({"n":2,"lt":[[0,1]],"upset":[0]})"), RoleError);

  auto ord = parse_poset_text(R"({"n":2,"lt":[],"order":[1,0]})");
  CHECK(std::get<OrderedLanguage>(ord.structure.language).order.sequence() == std::vector<Element>{1, 0});
  CHECK_THROWS_AS(parse_poset_text(R"({"n":2,"lt":[[0,1]],"order":[1,0]})"), RoleError);
}

TEST_CASE("json round trip") {
  GenerateOptions o;
  o.depth = 2;
  o.seed = 6;
  for (auto lang : {LanguageKind::Plain, LanguageKind::WithUpset, LanguageKind::Ordered}) {
    o.language = lang;
    auto g = generate_generic(o);
    PosetDocument doc{g.structure, g.certificate.core};
    const auto text = document_to_json(doc).dump();
    auto back = parse_poset_text(text);
    CHECK(back.structure == g.structure);
    CHECK(back.core == g.certificate.core);
    CHECK(document_to_json(back).dump() == text);
  }
}

TEST_CASE("file round trip") {
  const auto path = (std::filesystem::temp_directory_path() / "rpo_io_roundtrip.json").string();
  PosetDocument doc{{FinitePoset::chain(3), PlainLanguage{}}, std::nullopt};
  write_json_file(path, document_to_json(doc));
  CHECK(parse_poset_file(path).structure.poset == FinitePoset::chain(3));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(parse_poset_file(path), ParseError);
}

TEST_CASE("dot export") {
  CHECK(to_dot(FinitePoset::chain(2)) == "digraph poset {\n  rankdir=BT;\n  0;\n  1;\n  0 -> 1;\n}\n");
  CHECK(to_dot(FinitePoset::antichain(3)) == "digraph poset {\n  rankdir=BT;\n  0;\n  1;\n  2;\n}\n");
  const auto s42 = to_dot(family({FamilyKind::S, 4, 2}));
  std::size_t edges = 0;
  for (std::size_t pos = s42.find("->"); pos != std::string::npos; pos = s42.find("->", pos + 1)) ++edges;
  CHECK(edges == 3);
  CHECK(to_dot(family({FamilyKind::S, 4, 2})) == s42);
}

TEST_CASE("extension type json") {
  ExtensionType t{{0, 2}, {PairRel::Lt, PairRel::Inc}, std::nullopt, 1};
  OrderedLanguage lang{LinearOrder({2, 1, 0})};
  auto j = extension_type_to_json(t, lang);
  CHECK(j["rels"] == json::array({"Lt", "Inc"}));
  CHECK(j["pred"] == 2);
  t.slot = 0;
  CHECK(extension_type_to_json(t, lang)["pred"] == "min");
}

TEST_CASE("report json") {
  RunReport r{3, 0, {{"x", 2, {{"case", "a", "b"}}, false, ""}}};
  auto j = report_to_json(r);
  CHECK(j["seed"] == 3);
  CHECK(j["suites"][0]["name"] == "x");
  CHECK(j["suites"][0]["cases"] == 2);
  CHECK(j["suites"][0]["failures"][0]["expected"] == "a");
}
