#pragma once

#include <string>
#include <vector>

#include "coxcat/exact.hpp"

namespace coxcat {

// Integer polynomial, lowest degree first, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs);
  static Polynomial from_ints(const std::vector<long long>& coeffs);
  static Polynomial monomial(const BigInt& c, int degree);
  // (t - r_1)...(t - r_k)
  static Polynomial from_roots(const std::vector<long long>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  BigInt operator[](int i) const;
  const std::vector<BigInt>& coefficients() const { return c_; }
  std::vector<long long> to_ints() const;  // throws ArithmeticOverflow

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return c_ != o.c_; }

  BigInt operator()(const BigInt& x) const;
  // Quotient by (t - r); false if r is not a root.
  bool divide_linear(const BigInt& r, Polynomial* quotient) const;
  bool palindromic() const;
  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// f(z) = sum f_{i-1} z^i  ->  h(z) = sum f_{i-1} z^i (1-z)^{d-i}, d = deg f.
Polynomial f_to_h_poly(const Polynomial& f, int d);
Polynomial f_polynomial(const std::vector<long long>& fvec);

}  // namespace coxcat
