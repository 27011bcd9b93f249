#pragma once

#include "rpo/generic.hpp"
#include "rpo/poset.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace rpo {

/// Dual order: i < j in the result iff j < i in p.
FinitePoset reverse(const FinitePoset& p);

/// Bit 0: order kept inside F; bit 1: order kept inside the complement I;
/// bit 2: x ∈ F goes below y ∈ I unless y ≤ x.
inline constexpr std::uint8_t kAllTurnClauses = 0x7;

/// Strict ⊴_F between x and y given their input relation and F-membership.
PairRel turned_rel(PairRel r, bool x_in_f, bool y_in_f, std::uint8_t clause_mask = kAllTurnClauses);

/// The order ⊴_F on the same carrier. RoleError unless `upset` is upward closed.
/// With clauses disabled the rewritten relation may fail the axioms (AxiomError).
FinitePoset turn(const FinitePoset& p, const Bits& upset, std::uint8_t clause_mask = kAllTurnClauses);

struct RotationPartition {
  Bits x;
  Bits y;
  Bits z;
};

class PartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ClosureError : public PosetError {
 public:
  using PosetError::PosetError;
};

/// Checks the partition preconditions: disjoint cover, X down-closed, Z
/// up-closed, every x below every z. Throws PartitionError naming the first failure.
void validate_partition(const FinitePoset& p, const RotationPartition& part);

/// Classes keep their internal order; z < x; y < x iff x ⊥ y (and y ⊥ x iff
/// x < y); z < y iff y ⊥ z (and z ⊥ y iff y < z).
FinitePoset rotate(const FinitePoset& p, const RotationPartition& part);

class NotSeparable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Up-closure of inside ∪ widen, provided it misses `outside`.
Bits find_separating_upset(const FinitePoset& p, const Bits& inside, const Bits& outside,
                           const std::optional<Bits>& widen = std::nullopt);

/// How the second upset is chosen when composing two turns.
///  ComplementOfIdeal: F' is the up-closure, in the turned order, of Y ∪ Z.
///  AsPrinted:         F' is the up-closure, in the turned order, of X ∪ Y.
enum class SecondTurnRule : std::uint8_t { ComplementOfIdeal, AsPrinted };
std::string_view to_string(SecondTurnRule r) noexcept;

struct ComposeStrategy {
  std::optional<Bits> ideal;  ///< X; empty when absent
  SecondTurnRule rule = SecondTurnRule::ComplementOfIdeal;
};

class StrategyFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PairDeviation {
  Element a;
  Element b;
  PairRel expected;  ///< relation under the rotation
  PairRel observed;  ///< relation after the two turns
  bool in_core;
};

struct ComposeReport {
  RotationPartition partition;
  Bits second_upset;
  FinitePoset composed;
  std::vector<PairDeviation> deviations;
  std::size_t pairs_checked = 0;

  std::size_t deviations_on_core() const;
};

/// Turns p by F (= Z), then the result by F' per the strategy, and compares
/// the relation change against rotate(p, (X, P∖(X∪Z), Z)). Pairs are (a, b)
/// with a < b as indices; `core` (default: everything) marks which count as core.
ComposeReport compose_turns_check(const FinitePoset& p, const Bits& upset, const ComposeStrategy& strategy = {},
                                  std::optional<std::span<const Element>> core = std::nullopt);

}  // namespace rpo
