#include "coxcat/polynomial.hpp"

#include <sstream>

#include "coxcat/errors.hpp"

namespace coxcat {

Polynomial::Polynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::from_ints(const std::vector<long long>& coeffs) {
  std::vector<BigInt> c;
  for (long long x : coeffs) c.emplace_back(static_cast<long>(x));
  return Polynomial(std::move(c));
}

Polynomial Polynomial::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> v(degree + 1, 0);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<long long>& roots) {
  Polynomial p = monomial(1, 0);
  for (long long r : roots) p *= Polynomial({BigInt(static_cast<long>(-r)), BigInt(1)});
  return p;
}

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

BigInt Polynomial::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

std::vector<long long> Polynomial::to_ints() const {
  std::vector<long long> out;
  for (const auto& x : c_) {
    if (!x.fits_slong_p()) throw ArithmeticOverflow("polynomial coefficient " + x.get_str());
    out.push_back(x.get_si());
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

BigInt Polynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool Polynomial::divide_linear(const BigInt& r, Polynomial* quotient) const {
  if (c_.empty()) {
    if (quotient) *quotient = Polynomial();
    return true;
  }
  // synthetic division from the top
  std::vector<BigInt> q(c_.size() - 1, 0);
  BigInt carry = 0;
  for (int i = degree(); i >= 1; --i) {
    carry = c_[i] + carry * r;
    q[i - 1] = carry;
  }
  if (sgn(c_[0] + carry * r) != 0) return false;
  if (quotient) *quotient = Polynomial(std::move(q));
  return true;
}

bool Polynomial::palindromic() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != c_[c_.size() - 1 - i]) return false;
  return true;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    BigInt a = abs(c_[i]);
    if (!first) os << (sgn(c_[i]) < 0 ? " - " : " + ");
    else if (sgn(c_[i]) < 0) os << "-";
    first = false;
    if (i == 0 || a != 1) os << a.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Polynomial f_polynomial(const std::vector<long long>& fvec) { return Polynomial::from_ints(fvec); }

Polynomial f_to_h_poly(const Polynomial& f, int d) {
  Polynomial h;
  const Polynomial one_minus_z({BigInt(1), BigInt(-1)});
  for (int i = 0; i <= f.degree(); ++i) {
    Polynomial term = Polynomial::monomial(f[i], i);
    for (int k = i; k < d; ++k) term *= one_minus_z;
    h += term;
  }
  return h;
}

}  // namespace coxcat
