#pragma once

#include "rpo/poset.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rpo {

/// Quantifier-free type of three distinct points (a, b, c): r12 = rel(a,b),
/// r13 = rel(a,c), r23 = rel(b,c).
struct TripleType {
  PairRel r12 = PairRel::Inc;
  PairRel r13 = PairRel::Inc;
  PairRel r23 = PairRel::Inc;

  /// Relation between positions i and j (0-based).
  PairRel at(int i, int j) const;

  friend bool operator==(const TripleType&, const TripleType&) = default;
  friend auto operator<=>(const TripleType&, const TripleType&) = default;
};

std::string to_string(const TripleType& t);

/// Builds the type from a full 3x3 relation lookup; positions as in `at`.
TripleType triple_type_from(PairRel r12, PairRel r13, PairRel r23);

bool is_valid_triple_type(const TripleType& t);

/// Type of the positions permuted: result.at(i,j) = t.at(perm[i], perm[j]).
TripleType permuted(const TripleType& t, const std::array<int, 3>& perm);

/// Swaps Lt and Gt everywhere.
TripleType reversed(const TripleType& t);

enum class TripleClass : std::uint8_t { Pari, Cyc, CycPrime };
std::string_view to_string(TripleClass c) noexcept;

/// The 19 labelled 3-point posets, r12, r13, r23 lexicographic over Lt < Gt < Inc.
std::vector<TripleType> enumerate_triple_types();

/// Bit i enables the i-th cyc clause, in the order
/// x<y<z, y<z<x, z<x<y, (x<y, x⊥z, y⊥z), (y<z, y⊥x, z⊥x), (z<x, z⊥y, x⊥y).
inline constexpr std::uint8_t kAllCycClauses = 0x3f;

bool cyc_holds(const TripleType& t, std::uint8_t clause_mask = kAllCycClauses);
/// Odd number of incomparable pairs.
bool pari_holds(const TripleType& t);

/// Pari by parity first, then Cyc by its clauses, CycPrime otherwise.
TripleClass classify_triple_type(const TripleType& t, std::uint8_t cyc_clause_mask = kAllCycClauses);

/// Range-checked; nullopt when two indices coincide (degenerate triple).
std::optional<TripleClass> classify_triple(const FinitePoset& p, Element a, Element b, Element c);
TripleType triple_type_of(const FinitePoset& p, Element a, Element b, Element c);

enum class ReductRelation : std::uint8_t { Bot, Cyc, Pari };
std::string_view to_string(ReductRelation r) noexcept;
std::optional<ReductRelation> parse_reduct_relation(std::string_view s) noexcept;

/// Extensional relation: pairs (as 2-vectors) for Bot, distinct triples for
/// Cyc and Pari, in lexicographic order.
std::vector<std::vector<Element>> relation_table(const FinitePoset& p, ReductRelation which);

/// How the explicit case lists are read.
///  Corrected: the first pari line is the conjunction a⊥b, b⊥c, c⊥a and the
///             two c-clauses end in a⊥b.
///  Literal:   the first pari line is a disjunction, clauses exactly as printed.
enum class ListReading : std::uint8_t { Corrected, Literal };
std::string_view to_string(ListReading r) noexcept;

struct CrosscheckMismatch {
  TripleType type;
  TripleClass by_formula;
  std::vector<TripleClass> listed_in;  ///< every list whose clauses match (empty or more than one is a mismatch too)
};

struct CrosscheckReport {
  ListReading reading = ListReading::Corrected;
  std::size_t types = 0;
  std::size_t pari = 0;
  std::size_t cyc = 0;
  std::size_t cyc_prime = 0;
  std::vector<CrosscheckMismatch> mismatches;
};

/// Membership of `t` in the explicit case lists.
std::vector<TripleClass> listed_classes(const TripleType& t, ListReading reading);

CrosscheckReport orbit_list_crosscheck(ListReading reading = ListReading::Corrected);

}  // namespace rpo
