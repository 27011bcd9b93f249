#include "rpo/generic.hpp"

#include <algorithm>
#include <random>

namespace rpo {

Structure empty_structure(LanguageKind kind) {
  switch (kind) {
    case LanguageKind::Plain: return {FinitePoset{}, PlainLanguage{}};
    case LanguageKind::WithUpset: return {FinitePoset{}, UpsetLanguage{Bits(0)}};
    case LanguageKind::Ordered: return {FinitePoset{}, OrderedLanguage{LinearOrder{}}};
  }
  return {};
}

std::vector<std::vector<Element>> subsets_up_to(std::span<const Element> pool, std::size_t max_size) {
  std::vector<std::vector<Element>> out;
  const std::size_t n = pool.size();
  for (std::size_t size = 0; size <= std::min(max_size, n); ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<Element> s(size);
      for (std::size_t i = 0; i < size; ++i) s[i] = pool[idx[i]];
      out.push_back(std::move(s));
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

CertificationReport certify_extension(const Structure& s, std::span<const Element> core, std::size_t depth) {
  validate_language(s.poset, s.language);
  CertificationReport report;
  report.core.assign(core.begin(), core.end());
  std::sort(report.core.begin(), report.core.end());
  report.core.erase(std::unique(report.core.begin(), report.core.end()), report.core.end());
  report.depth = depth;
  for (const auto& base : subsets_up_to(report.core, depth)) {
    ++report.bases_examined;
    for (auto& t : consistent_extension_types(s.poset, base, s.language)) {
      if (auto w = find_witness(s, t)) {
        report.witnesses.push_back({std::move(t), *w});
      } else {
        report.deficiencies.push_back(std::move(t));
      }
    }
  }
  return report;
}

bool witnesses_valid(const Structure& s, const CertificationReport& cert) {
  return std::all_of(cert.witnesses.begin(), cert.witnesses.end(),
                     [&](const WitnessEntry& w) { return realizes(s, w.type, w.witness); });
}

namespace {

// Fisher-Yates over mt19937_64 so the permutation depends only on the seed.
template <typename T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

std::vector<Element> all_elements(std::size_t n) {
  std::vector<Element> v(n);
  for (Element i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

GenericApproximation generate_generic(const GenerateOptions& opts) {
  if (opts.depth < 1) throw std::invalid_argument("generate_generic: depth must be at least 1");
  Structure s = opts.start.value_or(empty_structure(opts.language));
  if (kind_of(s.language) != opts.language) throw RoleError("generate_generic: start structure has a different language");
  validate_language(s.poset, s.language);

  std::mt19937_64 rng(opts.seed);
  std::vector<Element> level = all_elements(s.poset.size());
  std::size_t completed = 0;

  for (std::size_t round = 0; round < opts.rounds; ++round) {
    level = all_elements(s.poset.size());
    std::vector<ExtensionType> work;
    for (const auto& base : subsets_up_to(level, opts.depth)) {
      auto types = consistent_extension_types(s.poset, base, s.language);
      work.insert(work.end(), std::make_move_iterator(types.begin()), std::make_move_iterator(types.end()));
    }
    seeded_shuffle(work, rng);
    for (const auto& t : work) {
      if (find_witness(s, t)) continue;
      if (s.poset.size() >= opts.max_elements) {
        GenericApproximation partial{s, certify_extension(s, level, opts.depth), completed};
        throw RoundLimitExceeded("generate_generic: element budget " + std::to_string(opts.max_elements) +
                                     " exhausted in round " + std::to_string(round + 1),
                                 std::move(partial));
      }
      std::optional<std::size_t> rank;
      if (kind_of(s.language) == LanguageKind::Ordered) {
        const auto [lo, hi] = admissible_ranks(s, t);
        rank = lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
      }
      s = realize_extension(std::move(s), t, rank);
    }
    ++completed;
  }

  GenericApproximation out{std::move(s), {}, completed};
  out.certificate = certify_extension(out.structure, level, opts.depth);
  return out;
}

}  // namespace rpo
