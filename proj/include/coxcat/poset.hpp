#pragma once

#include <boost/dynamic_bitset.hpp>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coxcat/complex.hpp"
#include "coxcat/exact.hpp"

namespace coxcat {

// Finite poset on dense ids 0..n-1 with explicit reachability bitsets.
class FinitePoset {
 public:
  FinitePoset() = default;
  FinitePoset(std::size_t n, const std::function<bool(int, int)>& leq);

  std::size_t size() const { return above_.size(); }
  bool leq(int a, int b) const { return a == b || above_[a].test(b); }
  bool less(int a, int b) const { return above_[a].test(b); }
  const boost::dynamic_bitset<>& strictly_above(int a) const { return above_[a]; }
  const std::vector<std::vector<int>>& upper_covers() const { return covers_; }
  // Elements sorted so that x < y implies x precedes y.
  const std::vector<int>& linear_extension() const { return linear_; }
  std::optional<int> minimum() const;
  std::optional<int> maximum() const;
  // Graded: all minimal elements rank 0, covers raise rank by exactly 1.
  bool is_ranked() const { return ranked_; }
  int rank(int x) const { return height_[x]; }
  int length() const;  // longest chain, in cover steps

  FinitePoset subposet(const std::vector<int>& ids) const;
  // Removes minimum and/or maximum if present; `ids` receives original ids.
  FinitePoset proper_part(std::vector<int>* ids = nullptr) const;
  // Adds a bottom if no minimum and a top if no maximum. New ids follow old ones.
  FinitePoset bounded(int* bottom = nullptr, int* top = nullptr) const;
  std::vector<int> open_interval(int x, int y) const;
  // mobius(x)[y] = mu(x, y) for y >= x, 0 elsewhere.
  std::vector<long long> mobius_from(int x) const;
  long long mobius(int x, int y) const;

 private:
  void finish();
  std::vector<boost::dynamic_bitset<>> above_;
  std::vector<std::vector<int>> covers_;
  std::vector<int> linear_, height_;
  bool ranked_ = true;
};

AbstractComplex order_complex(const FinitePoset& p);

// Number of multichains p_1 <= ... <= p_m fixed pointwise by `action`
// (a permutation of the elements; identity if empty). Only chains whose
// first element satisfies `start` are counted when given.
BigInt multichain_count(const FinitePoset& p, int m, const std::vector<int>& action = {},
                        const std::function<bool(int)>& start = {});
// Zeta polynomial m -> multichain_count(p, m) interpolated and evaluated at x.
Rational zeta_polynomial_value(const FinitePoset& p, long x);

struct CmViolation {
  int x, y;  // ids in the bounded poset
  std::string detail;
};
struct CmReport {
  std::size_t intervals_checked = 0;
  std::vector<CmViolation> violations;
  bool passed() const { return violations.empty(); }
};
// Homology-level Cohen-Macaulay test over every nonempty open interval of P-hat.
CmReport homology_cm_check(const FinitePoset& p);

}  // namespace coxcat
