#pragma once

// Brute-force reference implementations on plain boolean matrices. Nothing in
// here calls into the library's algorithms; conversion helpers only read
// FinitePoset::less.

#include "rpo/poset.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix empty(std::size_t n) { return Matrix(n, std::vector<bool>(n, false)); }

inline Matrix of(const rpo::FinitePoset& p) {
  Matrix m = empty(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) m[i][j] = p.less(i, j);
  return m;
}

inline Matrix closure(Matrix m) {
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (m[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (m[k][j]) m[i][j] = true;
  return m;
}

inline bool is_strict_order(const Matrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i]) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] && m[j][i]) return false;
      for (std::size_t k = 0; k < n; ++k)
        if (m[i][j] && m[j][k] && !m[i][k]) return false;
    }
  }
  return true;
}

// 0 = Lt, 1 = Gt, 2 = Inc between positions.
inline int rel(const Matrix& m, std::size_t i, std::size_t j) { return m[i][j] ? 0 : m[j][i] ? 1 : 2; }

inline Matrix triple_matrix(int r01, int r02, int r12) {
  Matrix m = empty(3);
  auto put = [&](std::size_t i, std::size_t j, int r) {
    if (r == 0) m[i][j] = true;
    if (r == 1) m[j][i] = true;
  };
  put(0, 1, r01);
  put(0, 2, r02);
  put(1, 2, r12);
  return m;
}

// All 27 assignments, kept when they form a strict order.
inline std::vector<std::array<int, 3>> triple_types() {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        if (is_strict_order(triple_matrix(a, b, c))) out.push_back({a, b, c});
  return out;
}

// Orbit of the 3-chain: some cyclic shift (u, v, w) of the positions has
// u < v and either v < w, or w incomparable to both.
inline bool cyc(const Matrix& m) {
  const std::array<std::array<std::size_t, 3>, 3> shifts{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
  for (auto [u, v, w] : shifts) {
    if (!m[u][v]) continue;
    if (m[v][w]) return true;
    if (rel(m, w, u) == 2 && rel(m, w, v) == 2) return true;
  }
  return false;
}

inline bool pari(const Matrix& m) {
  int inc = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) inc += rel(m, i, j) == 2;
  return inc % 2 == 1;
}

// x ⊴ y per the three clauses, strict part.
inline Matrix turn(const Matrix& m, const std::vector<bool>& f) {
  const std::size_t n = m.size();
  Matrix out = empty(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const bool le_xy = m[x][y];
      const bool le_yx = m[y][x];
      if (f[x] && f[y]) out[x][y] = le_xy;
      else if (!f[x] && !f[y]) out[x][y] = le_xy;
      else if (f[x] && !f[y]) out[x][y] = !le_yx;
    }
  return out;
}

// Consistent one-point extensions over `base`: every relation vector whose
// closure together with the poset is a strict order that leaves the old
// relations alone and reproduces exactly the chosen relations to the base.
inline std::size_t count_plain_extensions(const Matrix& m, const std::vector<std::size_t>& base) {
  const std::size_t n = m.size();
  std::size_t total = 1;
  for (std::size_t k = 0; k < base.size(); ++k) total *= 3;
  std::size_t ok = 0;
  for (std::size_t code = 0; code < total; ++code) {
    Matrix e = empty(n + 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e[i][j] = m[i][j];
    std::vector<int> want(base.size());
    std::size_t c = code;
    for (std::size_t k = 0; k < base.size(); ++k, c /= 3) {
      want[k] = static_cast<int>(c % 3);
      if (want[k] == 0) e[n][base[k]] = true;
      if (want[k] == 1) e[base[k]][n] = true;
    }
    e = closure(e);
    if (!is_strict_order(e)) continue;
    bool same = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) same = same && e[i][j] == m[i][j];
    for (std::size_t k = 0; k < base.size(); ++k) same = same && rel(e, n, base[k]) == want[k];
    ok += same;
  }
  return ok;
}

inline bool isomorphic(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < a.size(); ++i)
      for (std::size_t j = 0; ok && j < a.size(); ++j) ok = a[i][j] == b[perm[i]][perm[j]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Ordered pair type codes: 0 (<,≺) 1 (>,≻) 2 (⊥,≺) 3 (⊥,≻).
inline int ordered_type(const Matrix& m, const std::vector<std::size_t>& rank, std::size_t a, std::size_t b) {
  if (m[a][b]) return 0;
  if (m[b][a]) return 1;
  return rank[a] < rank[b] ? 2 : 3;
}

// Survivors among all 256 functions on the four ordered pair types: applied to
// every ordered pair of every labelled ordered 3-point poset, the images must
// be converse-compatible and form an ordered 3-point poset again.
inline std::vector<std::array<int, 4>> consistent_type_functions() {
  std::vector<std::array<int, 4>> out;
  const int conv[4] = {1, 0, 3, 2};
  for (int code = 0; code < 256; ++code) {
    std::array<int, 4> f{code & 3, (code >> 2) & 3, (code >> 4) & 3, (code >> 6) & 3};
    bool good = true;
    for (auto [a, b, c] : triple_types()) {
      const Matrix m = triple_matrix(a, b, c);
      std::vector<std::size_t> rank{0, 1, 2};
      do {
        bool ext = true;
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = 0; j < 3; ++j) ext = ext && (!m[i][j] || rank[i] < rank[j]);
        if (!ext) continue;
        Matrix img = empty(3);
        std::array<std::array<int, 3>, 3> prec{};
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = 0; j < 3; ++j) {
            if (i == j) continue;
            const int t = f[ordered_type(m, rank, i, j)];
            const int tc = f[ordered_type(m, rank, j, i)];
            if (conv[t] != tc) good = false;
            if (t == 0) img[i][j] = true;
            prec[i][j] = (t == 0 || t == 2) ? 1 : 0;
          }
        if (!good) break;
        if (!is_strict_order(img)) { good = false; break; }
        // The image ≺ must be a linear order extending the image poset.
        for (std::size_t i = 0; i < 3 && good; ++i)
          for (std::size_t j = 0; j < 3 && good; ++j)
            for (std::size_t k = 0; k < 3 && good; ++k)
              if (i != j && j != k && i != k && prec[i][j] && prec[j][k] && !prec[i][k]) good = false;
      } while (good && std::next_permutation(rank.begin(), rank.end()));
      if (!good) break;
    }
    if (good) out.push_back(f);
  }
  return out;
}

}  // namespace oracle
