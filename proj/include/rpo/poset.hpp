#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rpo {

using Element = std::size_t;
using Bits = boost::dynamic_bitset<std::uint64_t>;
using ElementPair = std::pair<Element, Element>;

/// Relation between two elements of a strict partial order.
enum class PairRel : std::uint8_t { Eq, Lt, Gt, Inc };

constexpr PairRel converse(PairRel r) noexcept {
  switch (r) {
    case PairRel::Lt: return PairRel::Gt;
    case PairRel::Gt: return PairRel::Lt;
    default: return r;
  }
}

std::string_view to_string(PairRel r) noexcept;
std::optional<PairRel> parse_pair_rel(std::string_view s) noexcept;

class PosetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The transitive closure of the supplied pairs is not a strict order.
class CycleError : public PosetError {
 public:
  using PosetError::PosetError;
};

/// A supplied full relation violates irreflexivity, antisymmetry or transitivity.
class AxiomError : public PosetError {
 public:
  using PosetError::PosetError;
};

Bits make_bits(std::size_t n, std::span<const Element> members);
Bits make_bits(std::size_t n, std::initializer_list<Element> members);
std::vector<Element> members(const Bits& s);

/// Strict partial order on {0..n-1}, stored as a full relation matrix.
///
/// Row i of `above` holds every j with i < j; `below` is its transpose. Both
/// are kept so that up- and down-probes are single bitset reads.
class FinitePoset {
 public:
  FinitePoset() = default;

  static FinitePoset antichain(std::size_t n);
  static FinitePoset chain(std::size_t n);

  /// Builds from a full strict relation. Nothing is closed; any missing
  /// forced pair is reported as an AxiomError naming the offending triple.
  static FinitePoset from_relation(std::size_t n, std::span<const ElementPair> lt);

  /// Builds from rows (rows[i] = elements strictly above i), validating axioms.
  static FinitePoset from_rows(std::vector<Bits> above);

  std::size_t size() const noexcept { return up_.size(); }

  bool less(Element i, Element j) const { return up_[i].test(j); }
  bool comparable(Element i, Element j) const { return i == j || up_[i].test(j) || down_[i].test(j); }
  PairRel rel(Element i, Element j) const {
    if (i == j) return PairRel::Eq;
    if (up_[i].test(j)) return PairRel::Lt;
    if (down_[i].test(j)) return PairRel::Gt;
    return PairRel::Inc;
  }

  const Bits& above(Element i) const { return up_[i]; }
  const Bits& below(Element i) const { return down_[i]; }
  /// Elements incomparable to i (excluding i).
  Bits incomparable(Element i) const;

  std::vector<ElementPair> strict_pairs() const;

  /// Appends a new element n placed above every member of `below_new` and
  /// under every member of `above_new`, incomparable to all others.
  /// `below_new` must be down-closed, `above_new` up-closed, and every member
  /// of `below_new` below every member of `above_new`; AxiomError otherwise.
  FinitePoset with_point(const Bits& below_new, const Bits& above_new) &&;
  FinitePoset with_point(const Bits& below_new, const Bits& above_new) const&;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) { return a.up_ == b.up_; }

 private:
  explicit FinitePoset(std::vector<Bits> up, std::vector<Bits> down)
      : up_(std::move(up)), down_(std::move(down)) {}

  static FinitePoset validated(std::vector<Bits> up);

  std::vector<Bits> up_;
  std::vector<Bits> down_;
};

/// First axiom violation of a relation given as rows, if any.
std::optional<std::string> find_axiom_violation(std::span<const Bits> above);

/// Transitive closure of `strict_pairs`; CycleError when the closure is not strict.
FinitePoset make_poset(std::size_t n, std::span<const ElementPair> strict_pairs);
FinitePoset make_poset(std::size_t n, std::initializer_list<ElementPair> strict_pairs);

/// Range-checked relation probe.
PairRel pair_rel(const FinitePoset& p, Element i, Element j);

enum class Role : std::uint8_t { UpClosed, Filter, Ideal, DownClosed };

std::string_view to_string(Role r) noexcept;

/// Whether `s` satisfies the role in p. Filter and Ideal are the directed
/// versions of UpClosed and DownClosed; the empty set is vacuously both.
bool check_role(const FinitePoset& p, const Bits& s, Role role);

Bits up_closure(const FinitePoset& p, const Bits& s);
Bits down_closure(const FinitePoset& p, const Bits& s);

/// Cover pairs (i, j): i < j with nothing strictly between. Sorted.
std::vector<ElementPair> hasse(const FinitePoset& p);

/// Poset induced on `keep` (ascending), relabelled 0..|keep|-1.
FinitePoset induced(const FinitePoset& p, std::span<const Element> keep);

// ---------------------------------------------------------------------------
// Named families used in the 3-transitivity argument.

enum class FamilyKind : std::uint8_t { S, T, A, B, C };

struct FamilySpec {
  FamilyKind kind;
  std::size_t n = 0;  ///< total size; ignored for C (size k+1)
  std::size_t k = 0;  ///< independent-point count
};

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Labelling: chain / bottom elements first, then the k independent points,
/// then the extra antichain (A, B only). T and B are the duals of S and A on
/// the same labels.
FinitePoset family(const FamilySpec& spec);

// ---------------------------------------------------------------------------

class SizeLimit : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Brute-force order-isomorphism test with degree pruning.
bool are_isomorphic(const FinitePoset& p, const FinitePoset& q, std::size_t max_n = 10);

}  // namespace rpo
