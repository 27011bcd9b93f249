#pragma once

#include "rpo/reducts.hpp"
#include "rpo/transforms.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rpo {

struct CaseFailure {
  std::string descriptor;
  std::string expected;
  std::string observed;
};

struct CaseReport {
  std::string name;
  std::size_t cases = 0;
  std::vector<CaseFailure> failures;
  bool skipped = false;
  std::string note;

  bool passed() const noexcept { return failures.empty(); }
};

/// Deliberate corruptions used to check that the suites notice them.
struct Faults {
  std::optional<int> drop_cyc_clause;   ///< 0..5
  std::optional<int> drop_turn_clause;  ///< 0..2

  std::uint8_t cyc_mask() const;
  std::uint8_t turn_mask() const;
};

/// 19 types, class sizes 7/6/6, zero crosscheck mismatches in the corrected reading.
CaseReport verify_triple_classification(const Faults& faults = {});

/// Every type under every F-membership pattern closed upward within the triple.
CaseReport verify_turn_preserves_triple_classes(const Faults& faults = {});

/// Pairs (t_in, t_out) agreeing on x–y, y–z and on the class must agree on x–z.
/// Admitted cases are listed in the note.
CaseReport verify_sim_transitivity_cases(const Faults& faults = {});

CaseReport verify_reverse_switches_cyc(const Faults& faults = {});

/// Exactly the six named functions survive; with `realize`, each is applied to
/// a depth-2 ordered approximation and the identity map is re-classified.
CaseReport verify_behavior_enumeration(std::uint64_t seed, bool realize);

/// Seeded random posets with random upward-closed sets: the turn is a poset,
/// keeps every triple class, and equals rotate(∅, I, F).
CaseReport verify_turn_samples(std::uint64_t seed, std::size_t samples = 1000, std::size_t max_n = 12,
                               const Faults& faults = {});

/// generate_generic in every language, re-certified from scratch.
CaseReport verify_genericity(std::uint64_t seed, std::size_t depth, std::size_t rounds = 3);

/// Turning a certified class-C approximation by its flagged set leaves the
/// core certified at `turned_depth`.
CaseReport verify_turn_genericity(std::uint64_t seed, std::size_t depth, std::size_t turned_depth = 1,
                                  const Faults& faults = {});

/// compose_turns_check on a class-C approximation: the flagged set with the
/// largest ideal below it, and every principal pair d < c in the core.
CaseReport verify_rotation_composition(std::uint64_t seed, std::size_t depth,
                                       SecondTurnRule rule = SecondTurnRule::ComplementOfIdeal);

/// verify_orbit_order on a plain approximation with constants from the core.
CaseReport verify_orbit_order_suite(std::uint64_t seed, std::size_t depth, std::size_t constants,
                                    std::size_t rounds = 4);

/// build_clean_skeleton on an ordered approximation with one core constant.
CaseReport verify_skeleton(std::uint64_t seed, std::size_t depth, std::size_t skeleton_depth = 1);

struct RunReport {
  std::uint64_t seed = 0;
  std::size_t depth = 0;
  std::vector<CaseReport> suites;

  bool passed() const noexcept;
};

inline constexpr std::size_t kMaxRunDepth = 3;

/// Case-analysis suites always run; the genericity suites need depth ≥ 1.
RunReport run_all(std::uint64_t seed, std::size_t depth, const Faults& faults = {});

}  // namespace rpo
