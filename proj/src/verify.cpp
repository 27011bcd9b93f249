#include "rpo/verify.hpp"

#include "rpo/canonical.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace rpo {

std::uint8_t Faults::cyc_mask() const {
  return drop_cyc_clause ? static_cast<std::uint8_t>(kAllCycClauses & ~(1u << *drop_cyc_clause)) : kAllCycClauses;
}

std::uint8_t Faults::turn_mask() const {
  return drop_turn_clause ? static_cast<std::uint8_t>(kAllTurnClauses & ~(1u << *drop_turn_clause)) : kAllTurnClauses;
}

bool RunReport::passed() const noexcept {
  return std::all_of(suites.begin(), suites.end(), [](const CaseReport& s) { return s.passed(); });
}

namespace {

std::string str(TripleClass c) { return std::string(to_string(c)); }

std::string pattern_string(int mask) {
  std::string s;
  for (int i = 0; i < 3; ++i) s += (mask >> i & 1) ? 'F' : 'I';
  return s;
}

std::string join(const std::vector<Element>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

GenericApproximation generate(std::uint64_t seed, std::size_t depth, LanguageKind lang, std::size_t rounds) {
  GenerateOptions o;
  o.depth = depth;
  o.seed = seed;
  o.language = lang;
  o.rounds = rounds;
  return generate_generic(o);
}

}  // namespace

CaseReport verify_triple_classification(const Faults& faults) {
  CaseReport r{"triple_classification", 0, {}, false, {}};
  const auto types = enumerate_triple_types();
  r.cases = types.size();
  if (types.size() != 19) r.failures.push_back({"type count", "19", std::to_string(types.size())});
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& t : types) ++counts[static_cast<int>(classify_triple_type(t, faults.cyc_mask()))];
  const std::size_t want[3] = {7, 6, 6};
  for (int c = 0; c < 3; ++c)
    if (counts[c] != want[c])
      r.failures.push_back({"size of " + str(static_cast<TripleClass>(c)), std::to_string(want[c]), std::to_string(counts[c])});
  for (const auto& t : types) {
    const TripleClass cls = classify_triple_type(t, faults.cyc_mask());
    auto listed = listed_classes(t, ListReading::Corrected);
    if (listed.size() != 1 || listed.front() != cls) {
      std::string obs;
      for (auto l : listed) obs += (obs.empty() ? "" : "+") + str(l);
      r.failures.push_back({"case lists on " + to_string(t), str(cls), obs.empty() ? "unlisted" : obs});
    }
  }
  r.note = "literal reading mismatches: " + std::to_string(orbit_list_crosscheck(ListReading::Literal).mismatches.size());
  return r;
}

CaseReport verify_turn_preserves_triple_classes(const Faults& faults) {
  CaseReport r{"turn_preserves_triple_classes", 0, {}, false, {}};
  for (const auto& t : enumerate_triple_types()) {
    for (int pat = 0; pat < 8; ++pat) {
      auto in_f = [&](int i) { return (pat >> i & 1) != 0; };
      bool admissible = true;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j && in_f(i) && t.at(i, j) == PairRel::Lt && !in_f(j)) admissible = false;
      if (!admissible) continue;
      ++r.cases;
      const TripleType u{turned_rel(t.r12, in_f(0), in_f(1), faults.turn_mask()),
                         turned_rel(t.r13, in_f(0), in_f(2), faults.turn_mask()),
                         turned_rel(t.r23, in_f(1), in_f(2), faults.turn_mask())};
      const std::string desc = to_string(t) + " with " + pattern_string(pat);
      if (!is_valid_triple_type(u)) {
        r.failures.push_back({desc, "an order", to_string(u)});
        continue;
      }
      const TripleClass before = classify_triple_type(t, faults.cyc_mask());
      const TripleClass after = classify_triple_type(u, faults.cyc_mask());
      if (before != after) r.failures.push_back({desc + " -> " + to_string(u), str(before), str(after)});
    }
  }
  return r;
}

CaseReport verify_sim_transitivity_cases(const Faults& faults) {
  CaseReport r{"sim_transitivity_cases", 0, {}, false, {}};
  r.note = "hypothesis: x-y and y-z relations equal, class of (x,y,z) equal; admitted:";
  const auto types = enumerate_triple_types();
  for (const auto& tin : types)
    for (const auto& tout : types) {
      if (tin.r12 != tout.r12 || tin.r23 != tout.r23) continue;
      if (classify_triple_type(tin, faults.cyc_mask()) != classify_triple_type(tout, faults.cyc_mask())) continue;
      ++r.cases;
      r.note += " " + to_string(tin) + "->" + to_string(tout);
      if (tin.r13 != tout.r13)
        r.failures.push_back({to_string(tin) + " -> " + to_string(tout), std::string(to_string(tin.r13)),
                              std::string(to_string(tout.r13))});
    }
  return r;
}

CaseReport verify_reverse_switches_cyc(const Faults& faults) {
  CaseReport r{"reverse_switches_cyc", 0, {}, false, {}};
  for (const auto& t : enumerate_triple_types()) {
    ++r.cases;
    const TripleClass before = classify_triple_type(t, faults.cyc_mask());
    const TripleClass after = classify_triple_type(reversed(t), faults.cyc_mask());
    const TripleClass want = before == TripleClass::Pari  ? TripleClass::Pari
                             : before == TripleClass::Cyc ? TripleClass::CycPrime
                                                          : TripleClass::Cyc;
    if (after != want) r.failures.push_back({to_string(t) + " reversed", str(want), str(after)});
  }
  return r;
}

CaseReport verify_behavior_enumeration(std::uint64_t seed, bool realize) {
  CaseReport r{"behavior_enumeration", 0, {}, false, {}};
  const auto survivors = enumerate_consistent_type_functions();
  r.cases = 256;
  std::vector<PairTypeFunction> named;
  for (BehaviorKind b : named_behaviors()) named.push_back(type_function_of(b));
  auto sorted = [](std::vector<PairTypeFunction> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (survivors.size() != 6) r.failures.push_back({"survivor count", "6", std::to_string(survivors.size())});
  if (sorted(survivors) != sorted(named))
    r.failures.push_back({"survivors", "the six named behaviours", "a different set"});
  if (!realize) {
    r.note = "realization skipped";
    return r;
  }
  const auto approx = generate(seed, 2, LanguageKind::Ordered, 3);
  const OrderedPoset src = to_ordered(approx.structure);
  ElementMap id(src.poset.size());
  for (Element i = 0; i < id.size(); ++i) id[i] = i;
  for (BehaviorKind b : named_behaviors()) {
    ++r.cases;
    const auto dst = apply_type_function(src, type_function_of(b));
    if (!dst) {
      r.failures.push_back({"realize " + std::string(to_string(b)), "an ordered poset", "no order"});
      continue;
    }
    try {
      const Behavior got = classify_behavior(src, *dst, id);
      if (got.kind != b || !got.fully_determined)
        r.failures.push_back({"classify realization of " + std::string(to_string(b)), std::string(to_string(b)),
                              std::string(to_string(got.kind)) + (got.fully_determined ? "" : " (ambiguous)")});
    } catch (const std::exception& e) {
      r.failures.push_back({"classify realization of " + std::string(to_string(b)), std::string(to_string(b)), e.what()});
    }
  }
  r.note = "realized on " + std::to_string(src.poset.size()) + " elements";
  return r;
}

namespace {

/// Random poset: each index pair is related with probability `density`, after
/// a random relabelling, then closed.
FinitePoset random_poset(std::size_t n, std::mt19937_64& rng) {
  std::vector<Element> perm(n);
  for (Element i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  const std::uint64_t density = 5 + rng() % 50;  // percent
  std::vector<ElementPair> pairs;
  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (rng() % 100 < density) pairs.emplace_back(perm[i], perm[j]);
  return make_poset(n, pairs);
}

Bits random_upset(const FinitePoset& p, std::mt19937_64& rng) {
  Bits seed(p.size());
  const std::uint64_t density = rng() % 60;
  for (Element i = 0; i < p.size(); ++i)
    if (rng() % 100 < density) seed.set(i);
  return up_closure(p, seed);
}

std::string describe(const FinitePoset& p, const Bits& f) {
  std::ostringstream os;
  os << "n=" << p.size() << " lt=[";
  bool first = true;
  for (auto [i, j] : p.strict_pairs()) {
    os << (first ? "" : ",") << i << "<" << j;
    first = false;
  }
  os << "] F={" << join(members(f)) << "}";
  return os.str();
}

}  // namespace

CaseReport verify_turn_samples(std::uint64_t seed, std::size_t samples, std::size_t max_n, const Faults& faults) {
  CaseReport r{"turn_samples", 0, {}, false, {}};
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t n = 1 + rng() % max_n;
    const FinitePoset p = random_poset(n, rng);
    const Bits f = random_upset(p, rng);
    ++r.cases;
    const std::string desc = describe(p, f);
    std::optional<FinitePoset> q;
    try {
      q = turn(p, f, faults.turn_mask());
    } catch (const AxiomError& e) {
      r.failures.push_back({desc, "turn is an order", e.what()});
      continue;
    }
    const FinitePoset rot = rotate(p, RotationPartition{Bits(n), ~f, f});
    if (!(rot == *q)) r.failures.push_back({desc, "rotate(empty, I, F) equals turn", "different relation"});
    if (!(reverse(reverse(p)) == p)) r.failures.push_back({desc, "reverse is an involution", "different relation"});
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) {
          if (a == b || a == c || b == c) continue;
          const auto before = classify_triple_type(triple_type_of(p, a, b, c), faults.cyc_mask());
          const auto after = classify_triple_type(triple_type_of(*q, a, b, c), faults.cyc_mask());
          if (before != after) {
            r.failures.push_back({desc + " triple " + join({a, b, c}), str(before), str(after)});
            a = b = c = n;  // one witness per sample
          }
        }
  }
  return r;
}

CaseReport verify_genericity(std::uint64_t seed, std::size_t depth, std::size_t rounds) {
  CaseReport r{"genericity_depth_" + std::to_string(depth), 0, {}, false, {}};
  for (LanguageKind lang : {LanguageKind::Plain, LanguageKind::WithUpset, LanguageKind::Ordered}) {
    const std::string name(to_string(lang));
    const auto g = generate(seed, depth, lang, rounds);
    const auto again = certify_extension(g.structure, g.certificate.core, depth);
    r.cases += again.witnesses.size() + again.deficiencies.size();
    for (const auto& d : again.deficiencies)
      r.failures.push_back({name + " type over {" + join(d.base) + "}", "a witness", "none"});
    if (!witnesses_valid(g.structure, g.certificate))
      r.failures.push_back({name + " certificate", "witnesses realize their types", "a stale witness"});
    if (again.witnesses.size() != g.certificate.witnesses.size())
      r.failures.push_back({name + " certificate size", std::to_string(g.certificate.witnesses.size()),
                            std::to_string(again.witnesses.size())});
    try {
      validate_language(g.structure.poset, g.structure.language);
    } catch (const std::exception& e) {
      r.failures.push_back({name + " annotation", "valid", e.what()});
    }
    r.note += name + ": n=" + std::to_string(g.structure.poset.size()) +
              " core=" + std::to_string(g.certificate.core.size()) + "; ";
  }
  return r;
}

CaseReport verify_turn_genericity(std::uint64_t seed, std::size_t depth, std::size_t turned_depth, const Faults& faults) {
  CaseReport r{"turn_genericity", 0, {}, false, {}};
  const auto g = generate(seed, depth, LanguageKind::WithUpset, 3);
  const Bits& f = std::get<UpsetLanguage>(g.structure.language).upset;
  FinitePoset q;
  try {
    q = turn(g.structure.poset, f, faults.turn_mask());
  } catch (const AxiomError& e) {
    r.cases = 1;
    r.failures.push_back({"turn of the flagged set", "an order", e.what()});
    return r;
  }
  const auto cert = certify_extension(Structure{q, PlainLanguage{}}, g.certificate.core, turned_depth);
  r.cases = cert.witnesses.size() + cert.deficiencies.size();
  for (const auto& d : cert.deficiencies) r.failures.push_back({"type over {" + join(d.base) + "}", "a witness", "none"});
  r.note = "n=" + std::to_string(q.size()) + " core=" + std::to_string(g.certificate.core.size()) +
           " flagged=" + std::to_string(f.count()) + " turned depth " + std::to_string(turned_depth);
  return r;
}

CaseReport verify_rotation_composition(std::uint64_t seed, std::size_t depth, SecondTurnRule rule) {
  CaseReport r{"rotation_composition", 0, {}, false, {}};
  const auto g = generate(seed, depth, LanguageKind::WithUpset, 3);
  const FinitePoset& p = g.structure.poset;
  const auto& core = g.certificate.core;
  const std::size_t n = p.size();

  auto check = [&](const std::string& desc, const Bits& z, const Bits& x) {
    ++r.cases;
    try {
      const auto rep = compose_turns_check(p, z, ComposeStrategy{x, rule}, std::span<const Element>(core));
      if (rep.deviations_on_core() != 0) {
        const auto& d = *std::find_if(rep.deviations.begin(), rep.deviations.end(),
                                      [](const PairDeviation& v) { return v.in_core; });
        r.failures.push_back({desc + " pair " + join({d.a, d.b}), std::string(to_string(d.expected)),
                              std::string(to_string(d.observed))});
      }
    } catch (const std::exception& e) {
      r.failures.push_back({desc, "an admissible second turn", e.what()});
    }
  };

  // Flagged set with the largest ideal strictly below all of it.
  const Bits& f = std::get<UpsetLanguage>(g.structure.language).upset;
  Bits x(n);
  if (f.any()) {
    x.set();
    for (auto e = f.find_first(); e != Bits::npos; e = f.find_next(e)) x &= p.below(e);
  }
  check("flagged set, |X|=" + std::to_string(x.count()), f, x);

  // Principal rotations: Z = up-closure of c, X = down-closure of d, d < c.
  for (Element c : core)
    for (Element d : core) {
      if (!p.less(d, c)) continue;
      Bits z = p.above(c);
      z.set(c);
      Bits xd = p.below(d);
      xd.set(d);
      check("Z=up(" + std::to_string(c) + ") X=down(" + std::to_string(d) + ")", z, xd);
    }
  r.note = std::string("second turn rule: ") + std::string(to_string(rule));
  return r;
}

CaseReport verify_orbit_order_suite(std::uint64_t seed, std::size_t depth, std::size_t constants, std::size_t rounds) {
  CaseReport r{"orbit_order_" + std::to_string(constants) + "_constants", 0, {}, false, {}};
  const auto g = generate(seed, depth, LanguageKind::Plain, rounds);
  const auto& core = g.certificate.core;
  if (core.size() < constants) {
    r.skipped = true;
    r.note = "core too small";
    return r;
  }
  std::size_t uncertified = 0;
  // Every choice of constants from the core, in increasing order.
  for (const auto& consts : subsets_up_to(core, constants)) {
    if (consts.size() != constants) continue;
    ++r.cases;
    const auto rep = verify_orbit_order(g.structure.poset, consts, std::span<const Element>(core));
    for (const auto& v : rep.violations) {
      if (!v.certified) {
        ++uncertified;
        continue;
      }
      std::string blocks;
      for (const auto& l : v.blocks) blocks += to_string(l);
      r.failures.push_back({"constants {" + join(consts) + "} " + std::string(to_string(v.axiom)) + " on " + blocks,
                            "a partial order", "violated"});
    }
  }
  r.note = "n=" + std::to_string(g.structure.poset.size()) + " core=" + std::to_string(core.size()) +
           " uncertified violations: " + std::to_string(uncertified);
  return r;
}

CaseReport verify_skeleton(std::uint64_t seed, std::size_t depth, std::size_t skeleton_depth) {
  CaseReport r{"clean_skeleton", 0, {}, false, {}};
  const auto g = generate(seed, depth, LanguageKind::Ordered, 3);
  const OrderedPoset op = to_ordered(g.structure);
  const auto& core = g.certificate.core;
  for (Element c : core) {
    ++r.cases;
    const std::vector<Element> consts{c};
    try {
      const auto sk = build_clean_skeleton(op, consts, skeleton_depth, std::span<const Element>(core));
      if (!sk.cleanness.clean) {
        const auto& w = *sk.cleanness.witness;
        r.failures.push_back({"constant " + std::to_string(c) + " pairs " + join({w[0].first, w[0].second}) + " / " +
                                  join({w[1].first, w[1].second}),
                              "same direction", "opposite"});
      }
      for (const auto& d : sk.extension.deficiencies)
        r.failures.push_back({"constant " + std::to_string(c) + " skeleton type over {" + join(d.base) + "}",
                              "a witness", "none"});
      r.note += std::to_string(c) + ":|S|=" + std::to_string(sk.members.size()) + " ";
    } catch (const EmptyBlock& e) {
      r.failures.push_back({"constant " + std::to_string(c), "nonempty slices", e.what()});
    }
  }
  return r;
}

RunReport run_all(std::uint64_t seed, std::size_t depth, const Faults& faults) {
  if (depth > kMaxRunDepth) throw std::invalid_argument("run_all: depth above " + std::to_string(kMaxRunDepth));
  RunReport rep{seed, depth, {}};
  rep.suites.push_back(verify_triple_classification(faults));
  rep.suites.push_back(verify_turn_preserves_triple_classes(faults));
  rep.suites.push_back(verify_sim_transitivity_cases(faults));
  rep.suites.push_back(verify_reverse_switches_cyc(faults));
  rep.suites.push_back(verify_behavior_enumeration(seed, depth >= 1));
  rep.suites.push_back(verify_turn_samples(seed, 1000, 12, faults));
  if (depth == 0) {
    for (const char* name : {"genericity", "turn_genericity", "rotation_composition", "orbit_order", "clean_skeleton"}) {
      CaseReport skipped{name, 0, {}, true, "depth 0"};
      rep.suites.push_back(std::move(skipped));
    }
    return rep;
  }
  rep.suites.push_back(verify_genericity(seed, depth));
  rep.suites.push_back(verify_turn_genericity(seed, depth, 1, faults));
  rep.suites.push_back(verify_rotation_composition(seed, depth));
  rep.suites.push_back(verify_orbit_order_suite(seed, depth, 1));
  rep.suites.push_back(verify_skeleton(seed, depth));
  return rep;
}

}  // namespace rpo
