#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace coxcat {

using Rational = mpq_class;
using BigInt = mpz_class;

// The real field Q(2cos(pi/k)). Elements are polynomials in theta = 2cos(pi/k)
// reduced modulo its minimal polynomial.
class NumberField {
 public:
  // Cached per k. k <= 3 gives Q itself.
  static std::shared_ptr<const NumberField> get(int k);
  static std::shared_ptr<const NumberField> rationals() { return get(1); }

  int tag() const { return tag_; }
  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  // Monic, lowest degree first.
  const std::vector<Rational>& minimal_polynomial() const { return minpoly_; }
  long double theta() const { return theta_; }

  // Reduce an arbitrary polynomial in theta to canonical form (size == degree()).
  std::vector<Rational> reduce(std::vector<Rational> p) const;
  // Coefficients of 2cos(pi/m); requires m | tag or 2cos(pi/m) rational.
  std::vector<Rational> two_cos_pi_over(int m) const;

 private:
  explicit NumberField(int k);
  int tag_;
  long double theta_;
  std::vector<Rational> minpoly_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class ExactScalar {
 public:
  ExactScalar();
  ExactScalar(FieldPtr field, const Rational& value);
  ExactScalar(FieldPtr field, std::vector<Rational> coeffs);
  ExactScalar(long v);  // NOLINT: integers convert into Q

  static ExactScalar two_cos_pi_over(FieldPtr field, int m);

  const NumberField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws unless is_rational()
  long double to_long_double() const;
  int sign() const;

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);
  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

  bool operator==(const ExactScalar& o) const;
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }
  // Total order on exact values (numeric comparison, exact equality test).
  static int compare(const ExactScalar& a, const ExactScalar& b);
  // Structural order on coefficient vectors; cheap, used for map keys only.
  static bool structural_less(const ExactScalar& a, const ExactScalar& b);

  std::string to_string() const;
  // Same value expressed in `field` (must be this field or an extension of Q).
  ExactScalar promoted(const FieldPtr& field) const;

 private:
  void unify(const ExactScalar& o);
  FieldPtr field_;
  std::vector<Rational> c_;
};

using ScalarVector = std::vector<ExactScalar>;
using ScalarMatrix = std::vector<ScalarVector>;

struct ScalarVectorLess {
  bool operator()(const ScalarVector& a, const ScalarVector& b) const;
};

// Field-generic helpers so the elimination code below serves both Rational
// and ExactScalar.
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const ExactScalar& x) { return x.is_zero(); }

// In-place reduced row echelon form; returns pivot columns. Zero rows dropped.
template <class T>
std::vector<int> rref(std::vector<std::vector<T>>& m, int ncols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && is_zero(m[p][col])) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    T inv = T(1) / m[row][col];
    for (int j = col; j < ncols; ++j) m[row][j] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || is_zero(m[r][col])) continue;
      T f = m[r][col];
      for (int j = col; j < ncols; ++j) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Basis of {x : m x = 0}, returned in reduced row echelon form.
template <class T>
std::vector<std::vector<T>> kernel_basis(std::vector<std::vector<T>> m, int ncols) {
  auto piv = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : piv) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(ncols, T(0));
    v[f] = T(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  rref(basis, ncols);
  return basis;
}

template <class T>
int matrix_rank(std::vector<std::vector<T>> m, int ncols) {
  return static_cast<int>(rref(m, ncols).size());
}

}  // namespace coxcat
