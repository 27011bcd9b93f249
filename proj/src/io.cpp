#include "rpo/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace rpo {

using nlohmann::json;

json poset_to_json(const FinitePoset& p) {
  json lt = json::array();
  for (auto [i, j] : p.strict_pairs()) lt.push_back({i, j});
  return {{"n", p.size()}, {"lt", std::move(lt)}};
}

json document_to_json(const PosetDocument& doc) {
  json j = poset_to_json(doc.structure.poset);
  if (const auto* u = std::get_if<UpsetLanguage>(&doc.structure.language)) j["upset"] = members(u->upset);
  if (const auto* o = std::get_if<OrderedLanguage>(&doc.structure.language)) j["order"] = o->order.sequence();
  if (doc.core) j["core"] = *doc.core;
  return j;
}

namespace {

std::vector<Element> element_list(const json& j, const char* key, std::size_t n) {
  if (!j.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  std::vector<Element> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw ParseError(std::string("\"") + key + "\" entries must be nonnegative integers");
    const auto e = v.get<Element>();
    if (e >= n) throw ParseError(std::string("\"") + key + "\" entry " + std::to_string(e) + " out of range");
    out.push_back(e);
  }
  return out;
}

}  // namespace

PosetDocument document_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("poset document must be an object");
  if (!j.contains("n") || !j["n"].is_number_unsigned()) throw ParseError("missing or invalid \"n\"");
  const auto n = j["n"].get<std::size_t>();
  if (!j.contains("lt") || !j["lt"].is_array()) throw ParseError("missing or invalid \"lt\"");
  std::vector<ElementPair> lt;
  for (std::size_t k = 0; k < j["lt"].size(); ++k) {
    const auto& pr = j["lt"][k];
    if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_unsigned() || !pr[1].is_number_unsigned())
      throw ParseError("\"lt\" entry " + std::to_string(k) + " must be a pair of nonnegative integers");
    lt.emplace_back(pr[0].get<Element>(), pr[1].get<Element>());
  }
  PosetDocument doc;
  doc.structure.poset = FinitePoset::from_relation(n, lt);
  if (j.contains("upset") && j.contains("order")) throw ParseError("\"upset\" and \"order\" are exclusive");
  if (j.contains("upset")) {
    const auto ms = element_list(j["upset"], "upset", n);
    doc.structure.language = UpsetLanguage{make_bits(n, ms)};
  } else if (j.contains("order")) {
    auto seq = element_list(j["order"], "order", n);
    std::vector<bool> seen(n);
    for (Element e : seq) {
      if (seen[e]) throw ParseError("\"order\" repeats " + std::to_string(e));
      seen[e] = true;
    }
    if (seq.size() != n) throw ParseError("\"order\" must list every element once");
    doc.structure.language = OrderedLanguage{LinearOrder(std::move(seq))};
  }
  validate_language(doc.structure.poset, doc.structure.language);
  if (j.contains("core")) doc.core = element_list(j["core"], "core", n);
  return doc;
}

PosetDocument parse_poset_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  return document_from_json(j);
}

PosetDocument parse_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_poset_text(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const AxiomError& e) {
    throw AxiomError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

json extension_type_to_json(const ExtensionType& t, const Language& lang) {
  json rels = json::array();
  for (PairRel r : t.rels) rels.push_back(std::string(to_string(r)));
  json j{{"rels", std::move(rels)}};
  if (t.in_upset) j["in_upset"] = *t.in_upset;
  if (t.slot) {
    const auto* o = std::get_if<OrderedLanguage>(&lang);
    if (*t.slot == 0 || !o) {
      j["pred"] = *t.slot == 0 ? json("min") : json(*t.slot);
    } else {
      std::vector<Element> by_rank = t.base;
      std::sort(by_rank.begin(), by_rank.end(),
                [&](Element a, Element b) { return o->order.precedes(a, b); });
      j["pred"] = by_rank[*t.slot - 1];
    }
  }
  return j;
}

json certificate_to_json(const CertificationReport& c, const Language& lang) {
  json w = json::array();
  for (const auto& e : c.witnesses)
    w.push_back({{"base", e.type.base}, {"type", extension_type_to_json(e.type, lang)}, {"witness", e.witness}});
  json d = json::array();
  for (const auto& t : c.deficiencies) d.push_back({{"base", t.base}, {"type", extension_type_to_json(t, lang)}});
  return {{"core", c.core}, {"depth", c.depth}, {"witnesses", std::move(w)}, {"deficiencies", std::move(d)}};
}

json report_to_json(const RunReport& r) {
  json suites = json::array();
  for (const auto& s : r.suites) {
    json f = json::array();
    for (const auto& x : s.failures)
      f.push_back({{"case", x.descriptor}, {"expected", x.expected}, {"observed", x.observed}});
    json one{{"name", s.name}, {"cases", s.cases}, {"failures", std::move(f)}};
    if (s.skipped) one["skipped"] = true;
    if (!s.note.empty()) one["note"] = s.note;
    suites.push_back(std::move(one));
  }
  return {{"suites", std::move(suites)}, {"seed", r.seed}, {"depth", r.depth}};
}

std::string to_dot(const FinitePoset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (Element i = 0; i < p.size(); ++i) os << "  " << i << ";\n";
  for (auto [i, j] : hasse(p)) os << "  " << i << " -> " << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace rpo
