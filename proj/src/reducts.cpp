#include "rpo/reducts.hpp"

#include <algorithm>

namespace rpo {

namespace {

constexpr PairRel kRels[] = {PairRel::Lt, PairRel::Gt, PairRel::Inc};

bool lt(const TripleType& t, int i, int j) { return t.at(i, j) == PairRel::Lt; }
bool inc(const TripleType& t, int i, int j) { return t.at(i, j) == PairRel::Inc; }
bool gt(const TripleType& t, int i, int j) { return t.at(i, j) == PairRel::Gt; }

}  // namespace

PairRel TripleType::at(int i, int j) const {
  if (i == j) return PairRel::Eq;
  if (i > j) return converse(at(j, i));
  if (i == 0 && j == 1) return r12;
  if (i == 0 && j == 2) return r13;
  return r23;
}

std::string to_string(const TripleType& t) {
  std::string s = "(";
  s += to_string(t.r12);
  s += ",";
  s += to_string(t.r13);
  s += ",";
  s += to_string(t.r23);
  s += ")";
  return s;
}

TripleType triple_type_from(PairRel r12, PairRel r13, PairRel r23) { return {r12, r13, r23}; }

bool is_valid_triple_type(const TripleType& t) {
  for (PairRel r : {t.r12, t.r13, t.r23})
    if (r == PairRel::Eq) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (i != j && j != k && i != k && lt(t, i, j) && lt(t, j, k) && !lt(t, i, k)) return false;
  return true;
}

TripleType permuted(const TripleType& t, const std::array<int, 3>& perm) {
  return {t.at(perm[0], perm[1]), t.at(perm[0], perm[2]), t.at(perm[1], perm[2])};
}

TripleType reversed(const TripleType& t) { return {converse(t.r12), converse(t.r13), converse(t.r23)}; }

std::string_view to_string(TripleClass c) noexcept {
  switch (c) {
    case TripleClass::Pari: return "Pari";
    case TripleClass::Cyc: return "Cyc";
    case TripleClass::CycPrime: return "CycPrime";
  }
  return "?";
}

std::vector<TripleType> enumerate_triple_types() {
  std::vector<TripleType> out;
  for (PairRel a : kRels)
    for (PairRel b : kRels)
      for (PairRel c : kRels)
        if (TripleType t{a, b, c}; is_valid_triple_type(t)) out.push_back(t);
  return out;
}

bool cyc_holds(const TripleType& t, std::uint8_t mask) {
  constexpr int x = 0, y = 1, z = 2;
  const bool clause[6] = {
      lt(t, x, y) && lt(t, y, z),
      lt(t, y, z) && lt(t, z, x),
      lt(t, z, x) && lt(t, x, y),
      lt(t, x, y) && inc(t, x, z) && inc(t, y, z),
      lt(t, y, z) && inc(t, y, x) && inc(t, z, x),
      lt(t, z, x) && inc(t, z, y) && inc(t, x, y),
  };
  for (int i = 0; i < 6; ++i)
    if ((mask >> i & 1) && clause[i]) return true;
  return false;
}

bool pari_holds(const TripleType& t) {
  const int n = (t.r12 == PairRel::Inc) + (t.r13 == PairRel::Inc) + (t.r23 == PairRel::Inc);
  return n % 2 == 1;
}

TripleClass classify_triple_type(const TripleType& t, std::uint8_t cyc_clause_mask) {
  if (pari_holds(t)) return TripleClass::Pari;
  if (cyc_holds(t, cyc_clause_mask)) return TripleClass::Cyc;
  return TripleClass::CycPrime;
}

TripleType triple_type_of(const FinitePoset& p, Element a, Element b, Element c) {
  return {pair_rel(p, a, b), pair_rel(p, a, c), pair_rel(p, b, c)};
}

std::optional<TripleClass> classify_triple(const FinitePoset& p, Element a, Element b, Element c) {
  const auto t = triple_type_of(p, a, b, c);
  if (a == b || a == c || b == c) return std::nullopt;
  return classify_triple_type(t);
}

std::string_view to_string(ReductRelation r) noexcept {
  switch (r) {
    case ReductRelation::Bot: return "bot";
    case ReductRelation::Cyc: return "cyc";
    case ReductRelation::Pari: return "pari";
  }
  return "?";
}

std::optional<ReductRelation> parse_reduct_relation(std::string_view s) noexcept {
  if (s == "bot") return ReductRelation::Bot;
  if (s == "cyc") return ReductRelation::Cyc;
  if (s == "pari") return ReductRelation::Pari;
  return std::nullopt;
}

std::vector<std::vector<Element>> relation_table(const FinitePoset& p, ReductRelation which) {
  std::vector<std::vector<Element>> out;
  const std::size_t n = p.size();
  if (which == ReductRelation::Bot) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (p.rel(a, b) == PairRel::Inc) out.push_back({a, b});
    return out;
  }
  const TripleClass want = which == ReductRelation::Cyc ? TripleClass::Cyc : TripleClass::Pari;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        if (a == b || a == c || b == c) continue;
        if (classify_triple_type(triple_type_of(p, a, b, c)) == want) out.push_back({a, b, c});
      }
  return out;
}

std::string_view to_string(ListReading r) noexcept {
  return r == ListReading::Corrected ? "corrected" : "literal";
}

std::vector<TripleClass> listed_classes(const TripleType& t, ListReading reading) {
  constexpr int a = 0, b = 1, c = 2;
  const bool literal = reading == ListReading::Literal;

  const bool first_line = literal ? (inc(t, a, b) || inc(t, b, c) || inc(t, c, a))
                                  : (inc(t, a, b) && inc(t, b, c) && inc(t, c, a));
  // The c-clauses carry "b⊥c" as printed; the corrected reading has "a⊥b".
  const bool c_low = lt(t, c, a) && lt(t, c, b) && (literal ? inc(t, b, c) : inc(t, a, b));
  const bool c_high = gt(t, c, a) && gt(t, c, b) && (literal ? inc(t, b, c) : inc(t, a, b));
  const bool pari = first_line ||
                    (lt(t, a, b) && lt(t, a, c) && inc(t, b, c)) || (lt(t, b, a) && lt(t, b, c) && inc(t, a, c)) ||
                    c_low || (gt(t, a, b) && gt(t, a, c) && inc(t, b, c)) ||
                    (gt(t, b, a) && gt(t, b, c) && inc(t, a, c)) || c_high;

  const bool cyc = (lt(t, a, b) && lt(t, b, c)) || (lt(t, b, c) && lt(t, c, a)) || (lt(t, c, a) && lt(t, a, b)) ||
                   (lt(t, a, b) && inc(t, c, a) && inc(t, c, b)) || (lt(t, b, c) && inc(t, a, b) && inc(t, a, c)) ||
                   (lt(t, c, a) && inc(t, b, a) && inc(t, b, c));

  const bool cyc_prime = (gt(t, a, b) && gt(t, b, c)) || (gt(t, b, c) && gt(t, c, a)) ||
                         (gt(t, c, a) && gt(t, a, b)) || (gt(t, a, b) && inc(t, c, a) && inc(t, c, b)) ||
                         (gt(t, b, c) && inc(t, a, b) && inc(t, a, c)) || (gt(t, c, a) && inc(t, b, a) && inc(t, b, c));

  std::vector<TripleClass> out;
  if (pari) out.push_back(TripleClass::Pari);
  if (cyc) out.push_back(TripleClass::Cyc);
  if (cyc_prime) out.push_back(TripleClass::CycPrime);
  return out;
}

CrosscheckReport orbit_list_crosscheck(ListReading reading) {
  CrosscheckReport r;
  r.reading = reading;
  for (const auto& t : enumerate_triple_types()) {
    ++r.types;
    const TripleClass cls = classify_triple_type(t);
    switch (cls) {
      case TripleClass::Pari: ++r.pari; break;
      case TripleClass::Cyc: ++r.cyc; break;
      case TripleClass::CycPrime: ++r.cyc_prime; break;
    }
    auto listed = listed_classes(t, reading);
    if (listed.size() != 1 || listed.front() != cls) r.mismatches.push_back({t, cls, std::move(listed)});
  }
  return r;
}

}  // namespace rpo
