#include "rpo/poset.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace rpo {

namespace {

struct Degree {
  std::size_t up, down;
  friend bool operator==(const Degree&, const Degree&) = default;
  friend auto operator<=>(const Degree&, const Degree&) = default;
};

std::vector<Degree> degrees(const FinitePoset& p) {
  std::vector<Degree> d(p.size());
  for (Element i = 0; i < p.size(); ++i) d[i] = {p.above(i).count(), p.below(i).count()};
  return d;
}

}  // namespace

bool are_isomorphic(const FinitePoset& p, const FinitePoset& q, std::size_t max_n) {
  if (p.size() > max_n || q.size() > max_n)
    throw SizeLimit("are_isomorphic: size exceeds limit " + std::to_string(max_n));
  if (p.size() != q.size()) return false;
  const std::size_t n = p.size();
  const auto dp = degrees(p), dq = degrees(q);
  {
    auto a = dp, b = dq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }

  std::vector<Element> image(n);
  std::vector<bool> used(n, false);
  std::function<bool(Element)> extend = [&](Element i) -> bool {
    if (i == n) return true;
    for (Element c = 0; c < n; ++c) {
      if (used[c] || !(dp[i] == dq[c])) continue;
      bool ok = true;
      for (Element j = 0; j < i && ok; ++j) ok = p.rel(j, i) == q.rel(image[j], c);
      if (!ok) continue;
      used[c] = true;
      image[i] = c;
      if (extend(i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return extend(0);
}

}  // namespace rpo
