#include "coxcat/lp.hpp"

#include <stdexcept>

namespace coxcat {

namespace {

class Tableau {
 public:
  // rows: coefficient rows (size ncols) with rhs >= 0; basis given.
  Tableau(RationalMatrix rows, RationalVector rhs, std::vector<int> basis, int ncols)
      : t_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)), n_(ncols) {}

  // Maximize cost.y over columns < limit; false if unbounded.
  bool optimize(const RationalVector& cost, int limit) {
    obj_.assign(n_, 0);
    objv_ = 0;
    for (int j = 0; j < n_; ++j) obj_[j] = -cost[j];
    for (std::size_t i = 0; i < t_.size(); ++i) {
      const Rational f = obj_[basis_[i]];
      if (sgn(f) == 0) continue;
      for (int j = 0; j < n_; ++j) obj_[j] -= f * t_[i][j];
      objv_ -= f * rhs_[i];
    }
    for (;;) {
      int enter = -1;
      for (int j = 0; j < limit; ++j)
        if (sgn(obj_[j]) < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        Rational r = rhs_[i] / t_[i][enter];
        if (leave < 0 || r < best || (r == best && basis_[i] < basis_[leave])) {
          leave = static_cast<int>(i);
          best = r;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(int r, int c) {
    const Rational p = t_[r][c];
    for (int j = 0; j < n_; ++j) t_[r][j] /= p;
    rhs_[r] /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      const Rational f = t_[i][c];
      if (sgn(f) == 0) continue;
      for (int j = 0; j < n_; ++j) t_[i][j] -= f * t_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    if (!obj_.empty()) {
      const Rational f = obj_[c];
      if (sgn(f) != 0) {
        for (int j = 0; j < n_; ++j) obj_[j] -= f * t_[r][j];
        objv_ -= f * rhs_[r];
      }
    }
    basis_[r] = c;
  }

  // After phase 1: pivot artificial columns (>= first_art) out of the basis,
  // dropping redundant rows.
  void expel(int first_art) {
    for (std::size_t i = 0; i < t_.size();) {
      if (basis_[i] < first_art) {
        ++i;
        continue;
      }
      int c = -1;
      for (int j = 0; j < first_art; ++j)
        if (sgn(t_[i][j]) != 0) {
          c = j;
          break;
        }
      if (c >= 0) {
        pivot(static_cast<int>(i), c);
        ++i;
      } else {
        t_.erase(t_.begin() + static_cast<long>(i));
        rhs_.erase(rhs_.begin() + static_cast<long>(i));
        basis_.erase(basis_.begin() + static_cast<long>(i));
      }
    }
  }

  Rational value() const { return objv_; }
  RationalVector solution() const {
    RationalVector y(n_, 0);
    for (std::size_t i = 0; i < t_.size(); ++i) y[basis_[i]] = rhs_[i];
    return y;
  }

 private:
  RationalMatrix t_;
  RationalVector rhs_;
  std::vector<int> basis_;
  int n_;
  RationalVector obj_;
  Rational objv_;
};

}  // namespace

LpResult lp_maximize(const RationalMatrix& a, const RationalVector& b, const RationalVector& c) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(c.size());
  // columns: u (n), v (n), slacks (m), artificials (one per negative rhs)
  int nart = 0;
  for (const auto& x : b) nart += sgn(x) < 0;
  const int first_art = 2 * n + m;
  const int ncols = first_art + nart;
  RationalMatrix rows(m, RationalVector(ncols, 0));
  RationalVector rhs(m);
  std::vector<int> basis(m);
  int art = first_art;
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(a[i].size()) != n) throw std::invalid_argument("lp row of wrong size");
    const int s = sgn(b[i]) < 0 ? -1 : 1;
    for (int j = 0; j < n; ++j) {
      rows[i][j] = s * a[i][j];
      rows[i][n + j] = -s * a[i][j];
    }
    rows[i][2 * n + i] = s;
    rhs[i] = s * b[i];
    if (s < 0) {
      rows[i][art] = 1;
      basis[i] = art++;
    } else {
      basis[i] = 2 * n + i;
    }
  }
  Tableau tab(std::move(rows), std::move(rhs), std::move(basis), ncols);
  LpResult out;
  if (nart > 0) {
    RationalVector phase1(ncols, 0);
    for (int j = first_art; j < ncols; ++j) phase1[j] = -1;
    tab.optimize(phase1, ncols);
    if (sgn(tab.value()) < 0) return out;
    tab.expel(first_art);
  }
  RationalVector cost(ncols, 0);
  for (int j = 0; j < n; ++j) {
    cost[j] = c[j];
    cost[n + j] = -c[j];
  }
  if (!tab.optimize(cost, first_art)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.value = tab.value();
  const auto y = tab.solution();
  out.x.resize(n);
  for (int j = 0; j < n; ++j) out.x[j] = y[j] - y[n + j];
  return out;
}

std::optional<RationalVector> strict_feasible_point(const RationalMatrix& a, const RationalVector& b, std::size_t dim) {
  const std::size_t n = dim;
  RationalMatrix rows;
  RationalVector rhs = b;
  for (const auto& r : a) {
    RationalVector row = r;
    row.push_back(1);
    rows.push_back(std::move(row));
  }
  RationalVector cap(n + 1, 0);
  cap[n] = 1;
  rows.push_back(cap);
  rhs.push_back(1);
  auto res = lp_maximize(rows, rhs, cap);
  if (res.status != LpStatus::Optimal || sgn(res.value) <= 0) return std::nullopt;
  res.x.pop_back();
  return res.x;
}

}  // namespace coxcat
