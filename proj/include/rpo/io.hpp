#pragma once

#include "rpo/generic.hpp"
#include "rpo/verify.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rpo {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Poset file: {"n": int, "lt": [[i, j], ...]} with the full strict relation,
/// plus optional "upset": [...], "order": [...] (least first) and "core": [...].
struct PosetDocument {
  Structure structure;
  std::optional<std::vector<Element>> core;
};

nlohmann::json poset_to_json(const FinitePoset& p);
nlohmann::json document_to_json(const PosetDocument& doc);

/// Validates axioms (AxiomError) and annotations (RoleError); malformed input is a ParseError.
PosetDocument document_from_json(const nlohmann::json& j);
PosetDocument parse_poset_file(const std::string& path);
PosetDocument parse_poset_text(const std::string& text);
void write_json_file(const std::string& path, const nlohmann::json& j);

/// {"rels", "in_upset"?, "pred"?}; "pred" is the ≺-greatest base element below
/// the new point, or "min", and needs the structure's order.
nlohmann::json extension_type_to_json(const ExtensionType& t, const Language& lang = PlainLanguage{});
nlohmann::json certificate_to_json(const CertificationReport& c, const Language& lang = PlainLanguage{});
nlohmann::json report_to_json(const RunReport& r);

/// DOT digraph of the cover relation, bottom to top.
std::string to_dot(const FinitePoset& p);

}  // namespace rpo
