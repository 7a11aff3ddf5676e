#include "coxcat/typea.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "coxcat/errors.hpp"

namespace coxcat {

namespace {

Partition sorted_desc(std::vector<int> v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

bool valid_path(const std::vector<int>& a, int m, bool prime) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    if (i > 0 && a[i] < a[i - 1]) return false;
    if (a[i] > m * i) return false;
    if (prime && i > 0 && a[i] == m * i) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> dyck_paths(int n, int m, bool prime) {
  std::vector<std::vector<int>> out;
  std::vector<int> a;
  std::function<void()> rec = [&] {
    const int i = static_cast<int>(a.size());
    if (i == n) {
      out.push_back(a);
      return;
    }
    const int lo = a.empty() ? 0 : a.back();
    const int hi = prime && i > 0 ? m * i - 1 : m * i;
    for (int x = lo; x <= hi; ++x) {
      a.push_back(x);
      rec();
      a.pop_back();
    }
  };
  if (n >= 1) rec();
  return out;
}

Partition path_type(const std::vector<int>& a) {
  std::vector<int> parts;
  for (std::size_t i = 0; i < a.size();) {
    std::size_t j = i;
    while (j < a.size() && a[j] == a[i]) ++j;
    parts.push_back(static_cast<int>(j - i));
    i = j;
  }
  return sorted_desc(parts);
}

TypeCounts count_dyck_by_type(int n, int m, bool prime) {
  TypeCounts out;
  for (const auto& p : dyck_paths(n, m, prime)) out[path_type(p)] += 1;
  return out;
}

BigInt k_formula(int n, int m, const Partition& lambda, bool prime) {
  const long base = static_cast<long>(m) * n + (prime ? -1 : 1);
  BigInt num = 1;
  for (std::size_t i = 1; i < lambda.size(); ++i) num *= BigInt(base - static_cast<long>(i));
  BigInt den = 1;
  std::map<int, int> mult;
  for (int x : lambda) ++mult[x];
  for (auto [part, mu] : mult)
    for (int k = 2; k <= mu; ++k) den *= k;
  if (num % den != 0) throw std::logic_error("K formula is not an integer");
  return num / den;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

BigInt classical_parking_count(int n, int m, bool prime) {
  const int cols = m * (n - 1) + 1;
  std::vector<int> f(n, 0);
  BigInt count = 0;
  for (;;) {
    std::vector<int> s = f;
    std::sort(s.begin(), s.end());
    if (valid_path(s, m, prime)) count += 1;
    int i = 0;
    while (i < n && ++f[i] == cols) f[i++] = 0;
    if (i == n) break;
  }
  return count;
}

namespace {

bool crosses(const Diagonal& a, const Diagonal& b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

void split_cells(const std::vector<int>& poly, std::vector<Diagonal> diags, std::vector<std::vector<int>>* out) {
  for (std::size_t k = 0; k < diags.size(); ++k) {
    auto [i, j] = diags[k];
    auto pi = std::find(poly.begin(), poly.end(), i), pj = std::find(poly.begin(), poly.end(), j);
    if (pi == poly.end() || pj == poly.end()) continue;
    std::vector<int> inner(pi, pj + 1), outer(poly.begin(), pi + 1);
    outer.insert(outer.end(), pj, poly.end());
    diags.erase(diags.begin() + static_cast<long>(k));
    std::vector<Diagonal> din, dout;
    for (const auto& d : diags) {
      const bool in = d.first >= i && d.second <= j;
      (in ? din : dout).push_back(d);
    }
    split_cells(inner, din, out);
    split_cells(outer, dout, out);
    return;
  }
  out->push_back(poly);
}

}  // namespace

std::vector<Dissection> dissections(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("dissections need n, m >= 1");
  const int N = m * n + 2;
  std::vector<Diagonal> all;
  for (int i = 0; i < N; ++i)
    for (int j = i + 2; j < N; ++j)
      if (!(i == 0 && j == N - 1) && (j - i) % m == 1 % m) all.push_back({i, j});
  std::vector<int> poly(N);
  std::iota(poly.begin(), poly.end(), 0);
  std::vector<Dissection> out;
  std::vector<Diagonal> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    Dissection d;
    d.diagonals = cur;
    split_cells(poly, cur, &d.cells);
    std::vector<int> parts;
    for (const auto& c : d.cells) {
      const int sz = static_cast<int>(c.size());
      if ((sz - 2) % m != 0) throw std::logic_error("cell of the wrong size");
      parts.push_back((sz - 2) / m);
    }
    d.type = sorted_desc(parts);
    out.push_back(std::move(d));
    for (std::size_t k = start; k < all.size(); ++k) {
      bool ok = true;
      for (const auto& c : cur)
        if (crosses(c, all[k])) ok = false;
      if (!ok) continue;
      cur.push_back(all[k]);
      rec(k + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

TypeCounts count_dissections_by_type(int n, int m) {
  TypeCounts out;
  for (const auto& d : dissections(n, m)) out[d.type] += 1;
  return out;
}

AbstractComplex labeled_dissection_complex(int n, int m) {
  std::map<std::pair<Diagonal, unsigned>, int> vid;
  std::vector<Face> faces;
  std::set<Face> seen;
  for (const auto& d : dissections(n, m)) {
    std::vector<int> need;
    for (const auto& c : d.cells) need.push_back((static_cast<int>(c.size()) - 2) / m);
    // assign each label to a cell with capacity left
    std::vector<unsigned> labels(d.cells.size(), 0);
    std::vector<int> left = need;
    std::function<void(int)> rec = [&](int lab) {
      if (lab == n) {
        Face f;
        for (const auto& diag : d.diagonals) {
          unsigned mask = 0;
          for (std::size_t c = 0; c < d.cells.size(); ++c)
            if (std::all_of(d.cells[c].begin(), d.cells[c].end(),
                            [&](int v) { return v >= diag.first && v <= diag.second; }))
              mask |= labels[c];
          auto it = vid.emplace(std::make_pair(diag, mask), static_cast<int>(vid.size())).first;
          f.push_back(it->second);
        }
        std::sort(f.begin(), f.end());
        if (!seen.insert(f).second) throw std::logic_error("labeled dissections collide");
        faces.push_back(std::move(f));
        return;
      }
      for (std::size_t c = 0; c < d.cells.size(); ++c) {
        if (left[c] == 0) continue;
        --left[c];
        labels[c] |= 1u << lab;
        rec(lab + 1);
        labels[c] &= ~(1u << lab);
        ++left[c];
      }
    };
    rec(0);
  }
  return AbstractComplex::from_faces(faces);
}

std::vector<int> permutation_of(const Group& g, ElementId w) {
  const int r = g.rank();
  const std::string label = "A" + std::to_string(r);
  if (g.datum().type_label != label && classify(g.datum().matrix) != label)
    throw std::invalid_argument("permutation_of needs type A");
  const auto& rs = g.roots();
  // a root is +-(e_p - e_q), supported on a contiguous block p..q-1
  auto ends = [&](RootId root) {
    int lo = -1, hi = -1;
    for (int i = 0; i < r; ++i)
      if (!rs.coord(root, i).is_zero()) {
        if (lo < 0) lo = i;
        hi = i;
      }
    const std::pair<int, int> pq{lo, hi + 1};
    return rs.is_positive(root) ? pq : std::pair<int, int>{pq.second, pq.first};
  };
  std::vector<int> perm(r + 1, -1);
  for (int i = 0; i < r; ++i) {
    auto [p, q] = ends(g.act(w, rs.simple(i)));
    if (perm[i] >= 0 && perm[i] != p) throw std::logic_error("inconsistent permutation");
    perm[i] = p;
    perm[i + 1] = q;
  }
  if (r == 0) perm[0] = 0;
  return perm;
}

std::vector<std::vector<int>> blocks_of(const Group& g, ElementId w) {
  const auto perm = permutation_of(g, w);
  std::vector<bool> done(perm.size(), false);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (done[i]) continue;
    std::vector<int> cyc;
    for (int j = static_cast<int>(i); !done[j]; j = perm[j]) {
      done[j] = true;
      cyc.push_back(j + 1);
    }
    std::sort(cyc.begin(), cyc.end());
    out.push_back(std::move(cyc));
  }
  return out;
}

TypeCounts cluster_type_counts(const ClusterComplex& d, bool positive_only) {
  const Group& g = d.group();
  const int n = g.rank();
  TypeCounts out;
  const auto& dc = d.complex();
  for (std::size_t k = 0; k <= static_cast<std::size_t>(dc.dimension() + 1); ++k)
    for (const auto& f : dc.faces_of_size(k)) {
      if (positive_only && !f.empty() && f.front() < n) continue;
      std::vector<int> sizes;
      for (const auto& b : blocks_of(g, d.nc().element(d.underline(f)))) sizes.push_back(static_cast<int>(b.size()));
      out[sorted_desc(sizes)] += 1;
    }
  return out;
}

}  // namespace coxcat
