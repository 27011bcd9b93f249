#pragma once

#include "rpo/poset.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace rpo {

/// Linear order on {0..n-1}: the sequence from least to greatest plus ranks.
class LinearOrder {
 public:
  LinearOrder() = default;
  explicit LinearOrder(std::vector<Element> sequence);

  static LinearOrder identity(std::size_t n);

  std::size_t size() const noexcept { return seq_.size(); }
  std::size_t rank(Element e) const { return rank_.at(e); }
  bool precedes(Element a, Element b) const { return rank_[a] < rank_[b]; }
  const std::vector<Element>& sequence() const noexcept { return seq_; }

  /// Adds element `size()` so that it ends up at rank `position`.
  void insert_new(std::size_t position);

  friend bool operator==(const LinearOrder& a, const LinearOrder& b) { return a.seq_ == b.seq_; }

 private:
  std::vector<Element> seq_;
  std::vector<std::size_t> rank_;
};

/// True iff x < y implies x precedes y.
bool extends(const LinearOrder& order, const FinitePoset& p);

struct PlainLanguage {
  friend bool operator==(const PlainLanguage&, const PlainLanguage&) = default;
};
/// Posets with a distinguished upward-closed set.
struct UpsetLanguage {
  Bits upset;
  friend bool operator==(const UpsetLanguage&, const UpsetLanguage&) = default;
};
/// Posets with a linear extension.
struct OrderedLanguage {
  LinearOrder order;
  friend bool operator==(const OrderedLanguage&, const OrderedLanguage&) = default;
};

using Language = std::variant<PlainLanguage, UpsetLanguage, OrderedLanguage>;

enum class LanguageKind : std::uint8_t { Plain, WithUpset, Ordered };

LanguageKind kind_of(const Language& lang) noexcept;
std::string_view to_string(LanguageKind k) noexcept;
std::optional<LanguageKind> parse_language_kind(std::string_view s) noexcept;

/// Language parameters break their role (upset not upward closed, order not a
/// linear extension, wrong width).
class RoleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InconsistentExtension : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void validate_language(const FinitePoset& p, const Language& lang);

/// A one-point extension over a base: the quantifier-free type of a new
/// point y over `base`.
struct ExtensionType {
  std::vector<Element> base;          ///< ascending element ids
  std::vector<PairRel> rels;          ///< rels[i] = relation of y to base[i] (Lt: y < base[i])
  std::optional<bool> in_upset;       ///< upset language only
  std::optional<std::size_t> slot;    ///< ordered language only: base elements preceding y

  friend bool operator==(const ExtensionType&, const ExtensionType&) = default;
  friend auto operator<=>(const ExtensionType&, const ExtensionType&) = default;
};

/// Poset together with its language annotation.
struct Structure {
  FinitePoset poset;
  Language language = PlainLanguage{};

  friend bool operator==(const Structure&, const Structure&) = default;
};

/// Every consistent extension type over `base` in a fixed deterministic order:
/// relation vectors lexicographically (Lt < Gt < Inc per base element), then
/// the upset bit (false first) or slot (ascending).
std::vector<ExtensionType> consistent_extension_types(const FinitePoset& p, std::span<const Element> base,
                                                      const Language& lang);

bool is_consistent(const FinitePoset& p, const ExtensionType& ext, const Language& lang);

/// Adds one point with exactly the base relations of `ext`; non-base relations
/// are the least forced by transitivity, everything else incomparable.
FinitePoset realize_extension(const FinitePoset& p, const ExtensionType& ext);

/// Insertion ranks [lo, hi] at which a realization of `ext` may enter the
/// linear order (ordered language only).
std::pair<std::size_t, std::size_t> admissible_ranks(const Structure& s, const ExtensionType& ext);

/// Language-aware realization. For the ordered language the new point is
/// inserted at `rank` (default: the least admissible rank).
Structure realize_extension(Structure s, const ExtensionType& ext, std::optional<std::size_t> rank = std::nullopt);

/// Whether x (not in the base) has type `ext` over its base.
bool realizes(const Structure& s, const ExtensionType& ext, Element x);

/// Least-index element realizing `ext`, if any.
std::optional<Element> find_witness(const Structure& s, const ExtensionType& ext);

struct WitnessEntry {
  ExtensionType type;
  Element witness;
  friend bool operator==(const WitnessEntry&, const WitnessEntry&) = default;
};

/// Outcome of checking the extension property over a core. Deficiencies are
/// data: an empty list means the core is certified at `depth`.
struct CertificationReport {
  std::vector<Element> core;
  std::size_t depth = 0;
  std::vector<WitnessEntry> witnesses;
  std::vector<ExtensionType> deficiencies;
  std::size_t bases_examined = 0;

  bool certified() const noexcept { return deficiencies.empty(); }
  friend bool operator==(const CertificationReport&, const CertificationReport&) = default;
};

using GenericCertificate = CertificationReport;

CertificationReport certify_extension(const Structure& s, std::span<const Element> core, std::size_t depth);

/// Re-checks that every recorded witness realizes its type.
bool witnesses_valid(const Structure& s, const CertificationReport& cert);

/// Every subset of `pool` with at most `max_size` elements, by size then lexicographically.
std::vector<std::vector<Element>> subsets_up_to(std::span<const Element> pool, std::size_t max_size);

struct GenerateOptions {
  std::size_t depth = 2;
  std::uint64_t seed = 0;
  LanguageKind language = LanguageKind::Plain;
  /// Saturation rounds; the certified core is everything present before the last one.
  std::size_t rounds = 3;
  /// Guardrail on the element count; crossing it aborts the current round.
  std::size_t max_elements = 200000;
  /// Starting structure (default: empty). Its language must match `language`.
  std::optional<Structure> start;
};

struct GenericApproximation {
  Structure structure;
  CertificationReport certificate;
  std::size_t rounds_completed = 0;
};

class RoundLimitExceeded : public std::runtime_error {
 public:
  RoundLimitExceeded(const std::string& what, GenericApproximation partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const GenericApproximation& partial() const noexcept { return partial_; }

 private:
  GenericApproximation partial_;
};

/// Leveled saturation: each round realizes, in seeded order, every consistent
/// extension type over every <=depth subset of the elements present at the
/// start of the round that has no witness yet.
GenericApproximation generate_generic(const GenerateOptions& opts);

/// Empty structure of the given language.
Structure empty_structure(LanguageKind kind);

}  // namespace rpo
