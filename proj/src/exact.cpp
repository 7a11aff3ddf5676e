#include "coxcat/exact.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "coxcat/errors.hpp"

namespace coxcat {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Remainder of p modulo the monic polynomial q.
Poly poly_rem(Poly p, const Poly& q) {
  trim(p);
  const std::size_t d = q.size() - 1;
  while (p.size() > d) {
    Rational lead = p.back();
    std::size_t shift = p.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) p[shift + i] -= lead * q[i];
    trim(p);
  }
  return p;
}

// C_0 = 2, C_1 = x, C_{j+1} = x C_j - C_{j-1}; C_j(2cos t) = 2cos(j t).
Poly chebyshev(int n) {
  Poly a{Rational(2)}, b{Rational(0), Rational(1)};
  if (n == 0) return a;
  for (int j = 1; j < n; ++j) {
    Poly next = poly_sub(poly_mul(Poly{Rational(0), Rational(1)}, b), a);
    a = std::move(b);
    b = std::move(next);
  }
  return b;
}

}  // namespace

NumberField::NumberField(int k) : tag_(k) {
  if (k <= 3) {
    tag_ = 1;
    theta_ = -2.0L;
    minpoly_ = {Rational(2), Rational(1)};
    return;
  }
  const long double pi = std::acos(-1.0L);
  theta_ = 2.0L * std::cos(pi / k);
  // Conjugates of theta are 2cos(pi j / k) with gcd(j, 2k) = 1, 0 < j < k.
  std::vector<long double> poly{1.0L};
  for (int j = 1; j < k; ++j) {
    if (std::gcd(j, 2 * k) != 1) continue;
    long double r = 2.0L * std::cos(pi * j / k);
    std::vector<long double> next(poly.size() + 1, 0.0L);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= r * poly[i];
    }
    poly = std::move(next);
  }
  for (long double c : poly) {
    long double rounded = std::nearbyint(c);
    if (std::fabs(rounded - c) > 1e-6L) throw std::logic_error("minimal polynomial rounding failed");
    minpoly_.push_back(Rational(static_cast<long>(rounded)));
  }
  // theta is a root of C_{2k}(x) - 2; the candidate must divide it exactly.
  Poly check = poly_sub(chebyshev(2 * k), Poly{Rational(2)});
  if (!poly_rem(check, minpoly_).empty())
    throw std::logic_error("minimal polynomial does not divide C_2k - 2");
}

FieldPtr NumberField::get(int k) {
  static std::mutex mu;
  static std::map<int, FieldPtr> cache;
  if (k <= 3) k = 1;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  FieldPtr f(new NumberField(k));
  cache.emplace(k, f);
  return f;
}

std::vector<Rational> NumberField::reduce(std::vector<Rational> p) const {
  p = poly_rem(std::move(p), minpoly_);
  p.resize(degree(), Rational(0));
  return p;
}

std::vector<Rational> NumberField::two_cos_pi_over(int m) const {
  if (m == 1) return reduce({Rational(-2)});
  if (m == 2) return reduce({});
  if (m == 3) return reduce({Rational(1)});
  if (tag_ % m != 0)
    throw std::invalid_argument("2cos(pi/" + std::to_string(m) + ") not in Q(2cos(pi/" +
                                std::to_string(tag_) + "))");
  return reduce(chebyshev(tag_ / m));
}

ExactScalar::ExactScalar() : ExactScalar(NumberField::rationals(), Rational(0)) {}

ExactScalar::ExactScalar(long v) : ExactScalar(NumberField::rationals(), Rational(v)) {}

ExactScalar::ExactScalar(FieldPtr field, const Rational& value) : field_(std::move(field)) {
  c_.assign(field_->degree(), Rational(0));
  c_[0] = value;
}

ExactScalar::ExactScalar(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
  c_ = field_->reduce(std::move(coeffs));
}

ExactScalar ExactScalar::two_cos_pi_over(FieldPtr field, int m) {
  auto c = field->two_cos_pi_over(m);
  return ExactScalar(std::move(field), std::move(c));
}

bool ExactScalar::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool ExactScalar::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Rational ExactScalar::rational_value() const {
  if (!is_rational()) throw std::domain_error("scalar is irrational: " + to_string());
  return c_[0];
}

long double ExactScalar::to_long_double() const {
  long double v = 0.0L;
  for (std::size_t i = c_.size(); i-- > 0;) v = v * field_->theta() + c_[i].get_d();
  return v;
}

int ExactScalar::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(c_[0]);
  long double v = to_long_double();
  if (std::fabs(v) < 1e-15L) throw std::logic_error("sign undecidable at working precision");
  return v > 0 ? 1 : -1;
}

// Promote Q-valued operands into the other operand's field.
void ExactScalar::unify(const ExactScalar& o) {
  if (field_ == o.field_) return;
  if (field_->tag() == 1) {
    Rational v = c_[0];
    field_ = o.field_;
    c_.assign(field_->degree(), Rational(0));
    c_[0] = v;
    return;
  }
  if (o.field_->tag() == 1) return;
  throw std::invalid_argument("mixed number fields");
}

namespace {
std::vector<Rational> coeffs_in(const ExactScalar& x, const NumberField& f) {
  if (&x.field() == &f) return x.coefficients();
  std::vector<Rational> c(f.degree(), Rational(0));
  c[0] = x.rational_value();
  return c;
}
}  // namespace

ExactScalar ExactScalar::operator-() const {
  ExactScalar r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  unify(o);
  auto oc = coeffs_in(o, *field_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += oc[i];
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  unify(o);
  auto oc = coeffs_in(o, *field_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= oc[i];
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  unify(o);
  if (c_.size() == 1) {
    c_[0] *= coeffs_in(o, *field_)[0];
    return *this;
  }
  c_ = field_->reduce(poly_mul(c_, coeffs_in(o, *field_)));
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  unify(o);
  auto b = coeffs_in(o, *field_);
  const int d = field_->degree();
  if (d == 1) {
    c_[0] /= b[0];
    return *this;
  }
  // Solve (b * x) = 1 for x via the multiplication matrix of b.
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, Rational(0)));
  Poly basis(1, Rational(1));
  for (int j = 0; j < d; ++j) {
    auto col = field_->reduce(poly_mul(b, basis));
    for (int i = 0; i < d; ++i) m[i][j] = col[i];
    basis.insert(basis.begin(), Rational(0));
  }
  m[0][d] = 1;
  auto piv = rref(m, d + 1);
  if (static_cast<int>(piv.size()) != d || piv.back() == d) throw std::logic_error("non-invertible field element");
  Poly inv(d);
  for (int i = 0; i < d; ++i) inv[i] = m[i][d];
  c_ = field_->reduce(poly_mul(c_, inv));
  return *this;
}

bool ExactScalar::operator==(const ExactScalar& o) const {
  if (field_ == o.field_) return c_ == o.c_;
  return (*this - o).is_zero();
}

int ExactScalar::compare(const ExactScalar& a, const ExactScalar& b) { return (a - b).sign(); }

bool ExactScalar::structural_less(const ExactScalar& a, const ExactScalar& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string ExactScalar::to_string() const {
  if (is_rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first && sgn(c_[i]) > 0) os << '+';
    first = false;
    os << c_[i].get_str();
    if (i >= 1) os << "*t";
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

ExactScalar ExactScalar::promoted(const FieldPtr& field) const {
  if (field_ == field) return *this;
  return ExactScalar(field, rational_value());
}

bool ScalarVectorLess::operator()(const ScalarVector& a, const ScalarVector& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ExactScalar::structural_less(a[i], b[i])) return true;
    if (ExactScalar::structural_less(b[i], a[i])) return false;
  }
  return false;
}

}  // namespace coxcat
