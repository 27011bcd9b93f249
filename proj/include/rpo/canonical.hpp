#pragma once

#include "rpo/generic.hpp"
#include "rpo/poset.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rpo {

// ---------------------------------------------------------------------------
// Orbits over constants.

/// label[i] = relation of the point to consts[i].
using OrbitLabel = std::vector<PairRel>;

std::string to_string(const OrbitLabel& l);
std::optional<OrbitLabel> parse_orbit_label(std::string_view s);

OrbitLabel orbit_label(const FinitePoset& p, std::span<const Element> consts, Element x);

/// Label blocks; members ascending, labels ordered lexicographically.
std::map<OrbitLabel, std::vector<Element>> orbit_partition(const FinitePoset& p, std::span<const Element> consts);

/// A label is a constant block iff it contains an Eq entry.
bool is_constant_label(const OrbitLabel& l);

class UnknownLabel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OrbitCompare : std::uint8_t { StrictlyBelow, StrictlyAbove, Incomparable, DivBelow, DivAbove, Same };
std::string_view to_string(OrbitCompare c) noexcept;

/// X ≤ Y: some x ≤ y. X < Y: every x < every y. DivBelow: X ≤ Y, Y ≰ X, not X < Y.
OrbitCompare orbit_compare(const FinitePoset& p, std::span<const Element> consts, const OrbitLabel& x,
                           const OrbitLabel& y);

enum class OrderAxiom : std::uint8_t { Reflexivity, Antisymmetry, Transitivity };
std::string_view to_string(OrderAxiom a) noexcept;

struct OrbitOrderViolation {
  OrderAxiom axiom;
  std::vector<OrbitLabel> blocks;     ///< X, Y (and Z for transitivity)
  std::vector<ElementPair> evidence;  ///< witnesses of the premises
  bool certified;                     ///< the first block meets the certified core
};

struct OrbitOrderReport {
  std::size_t blocks = 0;
  std::size_t relations = 0;  ///< ordered pairs X ≤ Y with X ≠ Y
  std::vector<OrbitOrderViolation> violations;

  std::size_t certified_violations() const;
};

/// Checks that block ≤ is a partial order. Without a core every block counts as certified.
OrbitOrderReport verify_orbit_order(const FinitePoset& p, std::span<const Element> consts,
                                    std::optional<std::span<const Element>> core = std::nullopt);

// ---------------------------------------------------------------------------
// Canonical maps and behaviours.

/// f[i] is the image of source element i.
using ElementMap = std::vector<Element>;

struct CanonicalCheck {
  bool canonical = true;
  /// (a, b, a', b'): equal source pair types over the constants, different image types.
  std::optional<std::array<Element, 4>> witness;
};

CanonicalCheck is_canonical_map(const FinitePoset& src, std::span<const Element> src_consts, const FinitePoset& dst,
                                std::span<const Element> dst_consts, const ElementMap& f);

/// Poset with a linear extension.
struct OrderedPoset {
  FinitePoset poset;
  LinearOrder prec;
};

/// RoleError unless `prec` is a linear extension of p.
OrderedPoset make_ordered(FinitePoset p, LinearOrder prec);
OrderedPoset to_ordered(const Structure& s);

/// Types of ordered pairs of distinct points: (Lt, ≺), (Gt, ≻), (Inc, ≺), (Inc, ≻).
enum class OrderedPairType : std::uint8_t { LtPrec, GtSucc, IncPrec, IncSucc };
std::string_view to_string(OrderedPairType t) noexcept;
OrderedPairType converse(OrderedPairType t) noexcept;
OrderedPairType ordered_pair_type(const OrderedPoset& op, Element a, Element b);

/// Image of each ordered pair type, indexed by the source type.
using PairTypeFunction = std::array<OrderedPairType, 4>;

enum class BehaviorKind : std::uint8_t { Id, Rev, ChainPres, ChainRev, AntichainPres, AntichainRev, Other };
std::string_view to_string(BehaviorKind b) noexcept;

/// The six named behaviours in the order Id, Rev, ChainPres, ChainRev, AntichainPres, AntichainRev.
const std::array<BehaviorKind, 6>& named_behaviors();
PairTypeFunction type_function_of(BehaviorKind b);

bool is_converse_symmetric(const PairTypeFunction& f);

/// Whether applying f to the three pairs of every ordered 3-point type yields an ordered 3-point type.
bool is_three_consistent(const PairTypeFunction& f);

/// Converse-symmetric, 3-consistent functions in index order.
std::vector<PairTypeFunction> enumerate_consistent_type_functions();

class NotCanonical : public std::runtime_error {
 public:
  NotCanonical(const std::string& what, std::array<Element, 4> witness)
      : std::runtime_error(what), witness_(witness) {}
  const std::array<Element, 4>& witness() const noexcept { return witness_; }

 private:
  std::array<Element, 4> witness_;
};

class NotInjective : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Behavior {
  BehaviorKind kind = BehaviorKind::Other;
  /// No other named behaviour agrees with the observed pairs.
  bool fully_determined = false;
  /// For Other: one violating source pair per named behaviour.
  std::vector<ElementPair> witnesses;
};

/// Observed type function of f (nullopt for unobserved source types).
/// Throws NotInjective / NotCanonical.
std::array<std::optional<OrderedPairType>, 4> observed_type_function(const OrderedPoset& src, const OrderedPoset& dst,
                                                                     const ElementMap& f);

/// First named behaviour agreeing with every observed pair type.
Behavior classify_behavior(const OrderedPoset& src, const OrderedPoset& dst, const ElementMap& f);

/// Builds the order induced on the same carrier by applying a type function to
/// every pair of `src`; nullopt when the result is not an ordered poset.
std::optional<OrderedPoset> apply_type_function(const OrderedPoset& src, const PairTypeFunction& f);

enum class OrbitBehaviorKind : std::uint8_t { LikeId, LikeRev, LikeBoth, Neither };
std::string_view to_string(OrbitBehaviorKind k) noexcept;

struct OrbitBehavior {
  OrbitBehaviorKind kind;
  std::optional<ElementPair> breaks_id;
  std::optional<ElementPair> breaks_rev;
};

OrbitBehavior behavior_on_orbit(const FinitePoset& src, std::span<const Element> consts, const FinitePoset& dst,
                                const ElementMap& f, const OrbitLabel& label);

enum class ImageRel : std::uint8_t { Absent, Lt, Gt, Inc, Eq, Mixed };
std::string_view to_string(ImageRel r) noexcept;

struct BetweenPattern {
  /// Image relation for input Lt, Gt, Inc (x in X, y in Y).
  std::array<ImageRel, 3> image{ImageRel::Absent, ImageRel::Absent, ImageRel::Absent};
  bool like_id = false;
};

BetweenPattern behavior_between_orbits(const FinitePoset& src, std::span<const Element> consts, const FinitePoset& dst,
                                       const ElementMap& f, const OrbitLabel& x, const OrbitLabel& y);

// ---------------------------------------------------------------------------
// Clean skeletons.

class EmptyBlock : public std::runtime_error {
 public:
  EmptyBlock(const std::string& what, std::vector<OrbitLabel> labels)
      : std::runtime_error(what), labels_(std::move(labels)) {}
  const std::vector<OrbitLabel>& labels() const noexcept { return labels_; }

 private:
  std::vector<OrbitLabel> labels_;
};

struct CleanlinessReport {
  bool clean = true;
  std::size_t pairs_checked = 0;
  /// Two pairs of equal type over the constants whose ≺ directions disagree.
  std::optional<std::array<ElementPair, 2>> witness;
};

/// Exhaustive ≺-cleanness check of S (ascending) over the constants.
CleanlinessReport check_cleanness(const OrderedPoset& op, std::span<const Element> consts, std::span<const Element> s);

struct SkeletonReport {
  std::vector<OrbitLabel> order;          ///< blocks in representative order
  std::vector<Element> representatives;   ///< r_1 ≺ ... ≺ r_k
  std::optional<Element> r0;              ///< nullopt: virtual sentinel below everything
  std::map<OrbitLabel, std::vector<Element>> slices;
  std::vector<Element> members;           ///< S, ascending
  CleanlinessReport cleanness;
  CertificationReport extension;          ///< on the poset induced by S, indices into `members`
};

/// Representatives are taken from `core` (default: all elements); among the
/// orders and choices available, the one with the largest total slice size wins.
/// r_0 is the ≺-least element when it precedes r_1. Throws EmptyBlock.
SkeletonReport build_clean_skeleton(const OrderedPoset& op, std::span<const Element> consts, std::size_t depth,
                                    std::optional<std::span<const Element>> core = std::nullopt);

}  // namespace rpo
