#pragma once
// Independent floating-point and brute-force oracles used only by tests.

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <vector>

#include "coxcat/coxeter.hpp"

namespace oracle {

using Vec = std::vector<double>;

// Roots by closure in the geometric representation with doubles.
inline std::vector<Vec> float_roots(const coxcat::CoxeterDatum& d) {
  const int n = d.rank;
  const double pi = std::acos(-1.0);
  std::vector<Vec> b(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = i == j ? 2.0 : -2.0 * std::cos(pi / d.matrix[i][j]);
  auto same = [](const Vec& x, const Vec& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (std::fabs(x[i] - y[i]) > 1e-7) return false;
    return true;
  };
  std::vector<Vec> roots;
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0.0);
    e[i] = 1.0;
    roots.push_back(e);
  }
  for (std::size_t k = 0; k < roots.size() && roots.size() < 5000; ++k)
    for (int i = 0; i < n; ++i) {
      Vec v = roots[k];
      double p = 0;
      for (int j = 0; j < n; ++j) p += b[i][j] * v[j];
      v[i] -= p;
      bool dup = false;
      for (const auto& r : roots)
        if (same(r, v)) dup = true;
      if (!dup) roots.push_back(v);
    }
  return roots;
}

// Group order by closure of the generating matrices acting on a generic vector.
inline std::size_t float_group_order(const coxcat::CoxeterDatum& d) {
  const int n = d.rank;
  const double pi = std::acos(-1.0);
  std::vector<Vec> b(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = i == j ? 2.0 : -2.0 * std::cos(pi / d.matrix[i][j]);
  Vec start(n);
  for (int i = 0; i < n; ++i) start[i] = 0.1 + 0.37 * i * i + 0.011 * i;
  std::vector<Vec> orbit{start};
  auto same = [](const Vec& x, const Vec& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (std::fabs(x[i] - y[i]) > 1e-7) return false;
    return true;
  };
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (int i = 0; i < n; ++i) {
      Vec v = orbit[k];
      double p = 0;
      for (int j = 0; j < n; ++j) p += b[i][j] * v[j];
      v[i] -= p;
      bool dup = false;
      for (const auto& r : orbit)
        if (same(r, v)) dup = true;
      if (!dup) orbit.push_back(v);
    }
  return orbit.size();
}

// Reduced Betti numbers over GF(p) from a facet list, by dense elimination.
// Independent of the library: closes faces itself and orients by position.
inline std::vector<long> betti_mod_p(const std::vector<std::vector<int>>& facets, long p) {
  std::set<std::vector<int>> faces{{}};
  for (const auto& f : facets) {
    std::size_t k = f.size();
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) sub.push_back(f[i]);
      faces.insert(sub);
    }
  }
  std::size_t top = 0;
  for (const auto& f : faces) top = std::max(top, f.size());
  std::vector<std::vector<std::vector<int>>> by(top + 1);
  for (const auto& f : faces) by[f.size()].push_back(f);
  auto rank_of = [&](std::size_t k) -> long {  // boundary from size k to size k-1
    if (k == 0 || k > top) return 0;
    const auto& rows = by[k - 1];
    const auto& cols = by[k];
    std::vector<std::vector<long>> m(rows.size(), std::vector<long>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t i = 0; i < cols[c].size(); ++i) {
        std::vector<int> sub = cols[c];
        sub.erase(sub.begin() + static_cast<long>(i));
        std::size_t r = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), sub) - rows.begin());
        m[r][c] = ((i % 2 ? -1 : 1) % p + p) % p;
      }
    long rank = 0;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols.size() && row < rows.size(); ++c) {
      std::size_t piv = row;
      while (piv < rows.size() && m[piv][c] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(m[piv], m[row]);
      long inv = 1;
      for (long e = p - 2, b = m[row][c]; e > 0; e >>= 1, b = b * b % p)
        if (e & 1) inv = inv * b % p;
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (r != row && m[r][c] != 0) {
          long f = m[r][c] * inv % p;
          for (std::size_t j = 0; j < cols.size(); ++j) m[r][j] = ((m[r][j] - f * m[row][j]) % p + p) % p;
        }
      ++row;
      ++rank;
    }
    return rank;
  };
  // index d+1 holds degree d, starting at degree -1
  std::vector<long> betti(top + 1);
  for (std::size_t k = 0; k <= top; ++k)
    betti[k] = static_cast<long>(by[k].size()) - rank_of(k) - rank_of(k + 1);
  return betti;
}

// Exponents of an irreducible finite Coxeter group, from the classification.
inline std::vector<long> exponents(char family, int n, int k = 0) {
  std::vector<long> e;
  switch (family) {
    case 'A': for (int i = 1; i <= n; ++i) e.push_back(i); break;
    case 'B': for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1); break;
    case 'D':
      for (int i = 1; i < n; ++i) e.push_back(2 * i - 1);
      e.push_back(n - 1);
      break;
    case 'I': e = {1, k - 1}; break;
    case 'H': e = n == 3 ? std::vector<long>{1, 5, 9} : std::vector<long>{1, 11, 19, 29}; break;
    case 'F': e = {1, 5, 7, 11}; break;
    case 'E':
      if (n == 6) e = {1, 4, 5, 7, 8, 11};
      if (n == 7) e = {1, 5, 7, 9, 11, 13, 17};
      if (n == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case 'G': e = {1, 5}; break;
  }
  return e;
}

// prod (m h + e_i + 1 + shift) / (e_i + 1) with h = largest exponent + 1; shift = 0 or -2.
inline long fuss_catalan(const std::vector<long>& e, long m, long shift = 0) {
  long h = e.back() + 1;
  for (long x : e) h = std::max(h, x + 1);
  long double num = 1, den = 1;
  for (long x : e) {
    num *= static_cast<long double>(m * h + x + 1 + shift);
    den *= static_cast<long double>(x + 1);
  }
  return std::lround(num / den);
}

// Number of set partitions of an n-set.
inline long bell(int n) {
  std::vector<std::vector<long>> t(n + 1, std::vector<long>(n + 1, 0));
  t[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    t[i][0] = t[i - 1][i - 1];
    for (int j = 1; j <= i; ++j) t[i][j] = t[i][j - 1] + t[i - 1][j - 1];
  }
  return t[n][0];
}

inline long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
