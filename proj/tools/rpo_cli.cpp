// Command-line front end: rpo <command> [flags]. Exit 0 ok, 1 check failed, 2 bad input.
#include "rpo/canonical.hpp"
#include "rpo/io.hpp"
#include "rpo/reducts.hpp"
#include "rpo/transforms.hpp"
#include "rpo/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace rpo;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Element> parse_list(const std::string& s) {
  std::vector<Element> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      throw InputError("not an element list: " + s);
    }
    if (used != item.size()) throw InputError("not an element list: " + s);
    out.push_back(static_cast<Element>(v));
  }
  return out;
}

Bits subset(const FinitePoset& p, const std::string& s) {
  try {
    return make_bits(p.size(), parse_list(s));
  } catch (const std::out_of_range& e) {
    throw InputError(e.what());
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void emit_json(const std::string& path, const json& j) { emit(path, j.dump(2) + "\n"); }

void require_in_range(const FinitePoset& p, const std::vector<Element>& v) {
  for (Element e : v)
    if (e >= p.size()) throw InputError("element " + std::to_string(e) + " out of range");
}

std::string check_line(const FinitePoset& q) {
  const auto v = find_axiom_violation([&] {
    std::vector<Bits> rows;
    for (Element i = 0; i < q.size(); ++i) rows.push_back(q.above(i));
    return rows;
  }());
  return v ? "FAIL " + *v : "PASS poset axioms hold";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite random partial orders: generation, turns, reducts and canonical behaviour"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a certified generic approximation");
  std::size_t depth = 2, rounds = 3, max_elements = 200000;
  std::uint64_t seed = 0;
  std::string language = "plain", out, cert_out;
  gen->add_option("--depth", depth, "Certified base size")->check(CLI::Range(1, 4));
  gen->add_option("--seed", seed, "Work-queue seed");
  gen->add_option("--language", language, "plain | upset | ordered")
      ->check(CLI::IsMember({"plain", "upset", "ordered"}));
  gen->add_option("--rounds", rounds, "Saturation rounds");
  gen->add_option("--max-elements", max_elements, "Element budget");
  gen->add_option("-o,--output", out, "Poset JSON output (default stdout)");
  gen->add_option("--certificate", cert_out, "Certificate JSON output");

  // turn
  auto* turn_cmd = app.add_subcommand("turn", "Turn a poset by an upward-closed set");
  std::string poset_path, upset_arg;
  bool check = false;
  turn_cmd->add_option("--poset", poset_path, "Poset JSON")->required();
  turn_cmd->add_option("--upset", upset_arg, "Upward-closed set, e.g. 1,3,5 (default: the file's upset)");
  turn_cmd->add_option("-o,--output", out, "Output JSON (default stdout)");
  turn_cmd->add_flag("--check", check, "Print an axiom check of the result");

  // rotate
  auto* rotate_cmd = app.add_subcommand("rotate", "Rotate a poset by a partition X, Y, Z");
  std::string xs, ys, zs;
  rotate_cmd->add_option("--poset", poset_path, "Poset JSON")->required();
  rotate_cmd->add_option("--X", xs, "Ideal class");
  rotate_cmd->add_option("--Y", ys, "Middle class");
  rotate_cmd->add_option("--Z", zs, "Filter class");
  rotate_cmd->add_option("-o,--output", out, "Output JSON (default stdout)");
  rotate_cmd->add_flag("--check", check, "Print an axiom check of the result");

  // classify
  auto* classify = app.add_subcommand("classify", "Classify a triple or list a reduct relation");
  std::string triple, relation, format = "text";
  classify->add_option("--poset", poset_path, "Poset JSON")->required();
  auto* triple_opt = classify->add_option("--triple", triple, "a,b,c");
  auto* rel_opt = classify->add_option("--relation", relation, "bot | cyc | pari")
                      ->check(CLI::IsMember({"bot", "cyc", "pari"}));
  classify->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  triple_opt->excludes(rel_opt);

  // orbits
  auto* orbits = app.add_subcommand("orbits", "List orbit blocks over constants and check the orbit order");
  std::string consts_arg;
  orbits->add_option("--poset", poset_path, "Poset JSON")->required();
  orbits->add_option("--consts", consts_arg, "Constants, e.g. 3,7");

  // behavior
  auto* behavior = app.add_subcommand("behavior", "Classify the behaviour of a map between ordered posets");
  std::string src_path, dst_path, map_path;
  behavior->add_option("--src", src_path, "Source poset JSON with \"order\"")->required();
  behavior->add_option("--dst", dst_path, "Target poset JSON with \"order\" (default: the source)");
  behavior->add_option("--map", map_path, "JSON array of images")->required();

  // skeleton
  auto* skeleton = app.add_subcommand("skeleton", "Build a clean skeleton over constants");
  std::size_t sk_depth = 1;
  skeleton->add_option("--ordered", poset_path, "Poset JSON with \"order\"")->required();
  skeleton->add_option("--consts", consts_arg, "Constants");
  skeleton->add_option("--depth", sk_depth, "Extension depth certified on the skeleton");

  // verify
  auto* verify = app.add_subcommand("verify", "Run every verification suite");
  std::size_t v_depth = 2;
  std::string report_out;
  verify->add_option("--seed", seed, "Seed for the sampled and generated suites");
  verify->add_option("--depth", v_depth, "Genericity depth (0 skips those suites)")->check(CLI::Range(0, 3));
  verify->add_option("--json", report_out, "Report JSON output");

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "Write the cover diagram as DOT");
  dot->add_option("--poset", poset_path, "Poset JSON")->required();
  dot->add_option("-o,--output", out, "DOT output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (gen->parsed()) {
      GenerateOptions o;
      o.depth = depth;
      o.seed = seed;
      o.language = *parse_language_kind(language);
      o.rounds = rounds;
      o.max_elements = max_elements;
      GenericApproximation g;
      int code = kOk;
      try {
        g = generate_generic(o);
      } catch (const RoundLimitExceeded& e) {
        std::cerr << e.what() << "; writing the partial result\n";
        g = e.partial();
        code = kCheckFailed;
      }
      emit_json(out, document_to_json({g.structure, g.certificate.core}));
      if (!cert_out.empty()) emit_json(cert_out, certificate_to_json(g.certificate, g.structure.language));
      std::cerr << "elements " << g.structure.poset.size() << ", core " << g.certificate.core.size()
                << ", deficiencies " << g.certificate.deficiencies.size() << "\n";
      return code;
    }

    if (turn_cmd->parsed()) {
      const auto doc = parse_poset_file(poset_path);
      const FinitePoset& p = doc.structure.poset;
      Bits f;
      if (!upset_arg.empty()) {
        f = subset(p, upset_arg);
      } else if (const auto* u = std::get_if<UpsetLanguage>(&doc.structure.language)) {
        f = u->upset;
      } else {
        throw InputError("turn: give --upset or a file with \"upset\"");
      }
      const FinitePoset q = turn(p, f);
      emit_json(out, poset_to_json(q));
      if (check) {
        const auto line = check_line(q);
        std::cerr << line << "\n";
        if (line.rfind("FAIL", 0) == 0) return kCheckFailed;
      }
      return kOk;
    }

    if (rotate_cmd->parsed()) {
      const auto doc = parse_poset_file(poset_path);
      const FinitePoset& p = doc.structure.poset;
      const FinitePoset q = rotate(p, RotationPartition{subset(p, xs), subset(p, ys), subset(p, zs)});
      emit_json(out, poset_to_json(q));
      if (check) {
        const auto line = check_line(q);
        std::cerr << line << "\n";
        if (line.rfind("FAIL", 0) == 0) return kCheckFailed;
      }
      return kOk;
    }

    if (classify->parsed()) {
      const auto doc = parse_poset_file(poset_path);
      const FinitePoset& p = doc.structure.poset;
      if (!triple.empty()) {
        const auto t = parse_list(triple);
        if (t.size() != 3) throw InputError("--triple needs three elements");
        require_in_range(p, t);
        const auto c = classify_triple(p, t[0], t[1], t[2]);
        const std::string name = c ? std::string(to_string(*c)) : "Degenerate";
        if (format == "json") std::cout << json{{"triple", t}, {"class", name}}.dump() << "\n";
        else std::cout << name << "\n";
        return kOk;
      }
      if (relation.empty()) throw InputError("classify: give --triple or --relation");
      const auto table = relation_table(p, *parse_reduct_relation(relation));
      if (format == "json") {
        std::cout << json{{"relation", relation}, {"tuples", table}}.dump() << "\n";
      } else {
        for (const auto& tup : table) {
          for (std::size_t i = 0; i < tup.size(); ++i) std::cout << (i ? " " : "") << tup[i];
          std::cout << "\n";
        }
      }
      return kOk;
    }

    if (orbits->parsed()) {
      const auto doc = parse_poset_file(poset_path);
      const FinitePoset& p = doc.structure.poset;
      const auto consts = parse_list(consts_arg);
      require_in_range(p, consts);
      json blocks = json::array();
      for (const auto& [label, ms] : orbit_partition(p, consts))
        blocks.push_back({{"label", to_string(label)}, {"members", ms}});
      std::optional<std::span<const Element>> core;
      if (doc.core) core = std::span<const Element>(*doc.core);
      const auto rep = verify_orbit_order(p, consts, core);
      json viol = json::array();
      for (const auto& v : rep.violations) {
        json labels = json::array();
        for (const auto& l : v.blocks) labels.push_back(to_string(l));
        viol.push_back({{"axiom", std::string(to_string(v.axiom))},
                        {"blocks", labels},
                        {"evidence", v.evidence},
                        {"certified", v.certified}});
      }
      std::cout << json{{"blocks", blocks}, {"relations", rep.relations}, {"violations", viol}}.dump(2) << "\n";
      return rep.certified_violations() == 0 ? kOk : kCheckFailed;
    }

    if (behavior->parsed()) {
      const auto src_doc = parse_poset_file(src_path);
      const auto dst_doc = dst_path.empty() ? src_doc : parse_poset_file(dst_path);
      const OrderedPoset src = to_ordered(src_doc.structure);
      const OrderedPoset dst = to_ordered(dst_doc.structure);
      std::ifstream in(map_path);
      if (!in) throw InputError("cannot open " + map_path);
      json mj;
      try {
        mj = json::parse(in);
      } catch (const json::parse_error& e) {
        throw ParseError(map_path + ": " + e.what());
      }
      if (mj.is_object() && mj.contains("map")) mj = mj["map"];
      if (!mj.is_array()) throw ParseError(map_path + ": expected an array of images");
      ElementMap f;
      for (const auto& v : mj) {
        if (!v.is_number_unsigned()) throw ParseError(map_path + ": images must be nonnegative integers");
        f.push_back(v.get<Element>());
      }
      try {
        const Behavior b = classify_behavior(src, dst, f);
        json j{{"behavior", std::string(to_string(b.kind))}, {"fully_determined", b.fully_determined}};
        if (!b.witnesses.empty()) j["witnesses"] = b.witnesses;
        std::cout << j.dump(2) << "\n";
        return b.kind == BehaviorKind::Other ? kCheckFailed : kOk;
      } catch (const NotCanonical& e) {
        std::cout << json{{"behavior", "NotCanonical"}, {"witness", e.witness()}, {"detail", e.what()}}.dump(2) << "\n";
        return kCheckFailed;
      }
    }

    if (skeleton->parsed()) {
      const auto doc = parse_poset_file(poset_path);
      const OrderedPoset op = to_ordered(doc.structure);
      const auto consts = parse_list(consts_arg);
      require_in_range(op.poset, consts);
      std::optional<std::span<const Element>> core;
      if (doc.core) core = std::span<const Element>(*doc.core);
      try {
        const auto sk = build_clean_skeleton(op, consts, sk_depth, core);
        json slices = json::object();
        for (const auto& [l, s] : sk.slices) slices[to_string(l)] = s;
        json j{{"members", sk.members},
               {"representatives", sk.representatives},
               {"r0", sk.r0 ? json(*sk.r0) : json("virtual")},
               {"slices", slices},
               {"clean", sk.cleanness.clean},
               {"pairs_checked", sk.cleanness.pairs_checked},
               {"extension_depth", sk.extension.depth},
               {"extension_deficiencies", sk.extension.deficiencies.size()}};
        if (sk.cleanness.witness) j["clean_witness"] = *sk.cleanness.witness;
        std::cout << j.dump(2) << "\n";
        return sk.cleanness.clean && sk.extension.certified() ? kOk : kCheckFailed;
      } catch (const EmptyBlock& e) {
        std::cerr << e.what() << "\n";
        return kCheckFailed;
      }
    }

    if (verify->parsed()) {
      const RunReport rep = run_all(seed, v_depth);
      for (const auto& s : rep.suites) {
        std::cout << (s.skipped ? "SKIP " : s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.cases
                  << " cases)";
        if (!s.failures.empty()) std::cout << " " << s.failures.size() << " failures";
        std::cout << "\n";
        for (std::size_t i = 0; i < std::min<std::size_t>(s.failures.size(), 5); ++i)
          std::cout << "  " << s.failures[i].descriptor << ": expected " << s.failures[i].expected << ", observed "
                    << s.failures[i].observed << "\n";
      }
      if (!report_out.empty()) emit_json(report_out, report_to_json(rep));
      return rep.passed() ? kOk : kCheckFailed;
    }

    if (dot->parsed()) {
      const auto doc = parse_poset_file(poset_path);
      emit(out, to_dot(doc.structure.poset));
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const PosetError& e) {
    std::cerr << "poset error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
