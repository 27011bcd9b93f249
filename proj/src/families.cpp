#include "rpo/poset.hpp"

#include <string>

namespace rpo {

namespace {

FinitePoset dual_of(const FinitePoset& p) {
  std::vector<Bits> up;
  up.reserve(p.size());
  for (Element i = 0; i < p.size(); ++i) up.push_back(p.below(i));
  return FinitePoset::from_rows(std::move(up));
}

// `chain` elements 0..chain-1 in a chain, then `tops` points above all of them,
// then `loose` points incomparable to everything.
FinitePoset chain_under_antichain(std::size_t chain, std::size_t tops, std::size_t loose) {
  const std::size_t n = chain + tops + loose;
  std::vector<ElementPair> lt;
  for (Element i = 0; i < chain; ++i) {
    for (Element j = i + 1; j < chain + tops; ++j) lt.emplace_back(i, j);
  }
  return FinitePoset::from_relation(n, lt);
}

}  // namespace

FinitePoset family(const FamilySpec& spec) {
  const auto [kind, n, k] = spec;
  if (kind == FamilyKind::C) {
    if (k < 1) throw FamilyError("C_k needs k >= 1");
    return chain_under_antichain(1, k, 0);
  }
  if (k < 1 || k > n) throw FamilyError("family needs 1 <= k <= n (got n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  switch (kind) {
    case FamilyKind::S: return chain_under_antichain(n - k, k, 0);
    case FamilyKind::T: return dual_of(chain_under_antichain(n - k, k, 0));
    case FamilyKind::A:
    case FamilyKind::B: {
      if (k + 1 > n) throw FamilyError("A/B family needs k <= n-1");
      auto a = chain_under_antichain(1, k, n - k - 1);
      return kind == FamilyKind::A ? a : dual_of(a);
    }
    case FamilyKind::C: break;
  }
  throw FamilyError("unknown family kind");
}

}  // namespace rpo
