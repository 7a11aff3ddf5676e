#include "coxcat/smith.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coxcat {

namespace {

bool checked_axpy(std::int64_t a, std::int64_t f, std::int64_t b, std::int64_t& out) {
  // out = a - f*b
  std::int64_t prod;
  if (__builtin_mul_overflow(f, b, &prod)) return false;
  return !__builtin_sub_overflow(a, prod, &out);
}

}  // namespace

std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> a) {
  std::vector<BigInt> diag;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    auto place_min = [&]() -> bool {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (sgn(a[i][j]) != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) return false;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      return true;
    };
    if (!place_min()) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (sgn(a[i][t]) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (sgn(a[t][j]) != 0) dirty = true;
      }
      if (dirty) {
        place_min();
        continue;
      }
      // Divisibility: fold any offending row into row t and retry.
      bool fixed = true;
      for (std::size_t i = t + 1; i < rows && fixed; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (sgn(a[i][j] % a[t][t]) != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            fixed = false;
            break;
          }
      if (fixed) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

SmithResult smith_normal_form(SparseMatrix m) {
  SmithResult res;
  auto& cols = m.columns;
  std::vector<std::set<int>> rows(m.rows);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    auto& col = cols[c];
    std::sort(col.begin(), col.end());
    col.erase(std::remove_if(col.begin(), col.end(), [](auto& e) { return e.second == 0; }), col.end());
    for (auto& [r, v] : col) rows[r].insert(static_cast<int>(c));
  }
  std::vector<char> alive(cols.size(), 1);

  // Phase 1: eliminate unit pivots.
  bool overflow = false;
  std::vector<std::pair<int, std::int64_t>> merged;
  while (!overflow) {
    long best_cost = -1;
    int pc = -1, pr = -1;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!alive[c] || cols[c].empty()) continue;
      for (auto& [r, v] : cols[c]) {
        if (v != 1 && v != -1) continue;
        long cost = static_cast<long>(rows[r].size() - 1) * static_cast<long>(cols[c].size() - 1);
        if (best_cost < 0 || cost < best_cost) {
          best_cost = cost;
          pc = static_cast<int>(c);
          pr = r;
        }
      }
      if (best_cost == 0) break;
    }
    if (pc < 0) break;
    const auto pivot_col = cols[pc];
    std::int64_t u = 0;
    for (auto& [r, v] : pivot_col)
      if (r == pr) u = v;
    std::vector<int> targets(rows[pr].begin(), rows[pr].end());
    for (int c2 : targets) {
      if (c2 == pc) continue;
      auto& col = cols[c2];
      std::int64_t f = 0;
      for (auto& [r, v] : col)
        if (r == pr) f = v * u;
      merged.clear();
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < pivot_col.size()) {
        if (j == pivot_col.size() || (i < col.size() && col[i].first < pivot_col[j].first)) {
          merged.push_back(col[i++]);
        } else if (i == col.size() || pivot_col[j].first < col[i].first) {
          std::int64_t val;
          if (!checked_axpy(0, f, pivot_col[j].second, val)) {
            overflow = true;
            break;
          }
          merged.emplace_back(pivot_col[j].first, val);
          ++j;
        } else {
          std::int64_t val;
          if (!checked_axpy(col[i].second, f, pivot_col[j].second, val)) {
            overflow = true;
            break;
          }
          if (val != 0) merged.emplace_back(col[i].first, val);
          ++i;
          ++j;
        }
      }
      if (overflow) break;
      for (auto& [r, v] : col) rows[r].erase(c2);
      col = merged;
      for (auto& [r, v] : col) rows[r].insert(c2);
    }
    if (overflow) break;
    for (auto& [r, v] : pivot_col) rows[r].erase(pc);
    cols[pc].clear();
    alive[pc] = 0;
    rows[pr].clear();
    ++res.rank;
  }

  // Phase 2: dense reduction of the remainder.
  std::map<int, std::size_t> row_index;
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (!alive[c] || cols[c].empty()) continue;
    rest.push_back(c);
    for (auto& [r, v] : cols[c]) row_index.emplace(r, 0);
  }
  if (!rest.empty()) {
    std::size_t k = 0;
    for (auto& [r, idx] : row_index) idx = k++;
    std::vector<std::vector<BigInt>> dense(row_index.size(), std::vector<BigInt>(rest.size(), BigInt(0)));
    for (std::size_t j = 0; j < rest.size(); ++j)
      for (auto& [r, v] : cols[rest[j]]) dense[row_index[r]][j] = BigInt(static_cast<long>(v));
    for (auto& d : smith_diagonal(std::move(dense))) {
      ++res.rank;
      if (d > 1) res.torsion.push_back(d);
    }
  }
  std::sort(res.torsion.begin(), res.torsion.end());
  return res;
}

}  // namespace coxcat
