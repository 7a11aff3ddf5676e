#include "coxcat/poset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "coxcat/errors.hpp"

namespace coxcat {

FinitePoset::FinitePoset(std::size_t n, const std::function<bool(int, int)>& leq) {
  above_.assign(n, boost::dynamic_bitset<>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && leq(static_cast<int>(a), static_cast<int>(b))) above_[a].set(b);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = above_[a].find_first(); b != boost::dynamic_bitset<>::npos; b = above_[a].find_next(b))
      if (above_[b].test(a)) throw std::invalid_argument("relation is not antisymmetric");
  finish();
}

void FinitePoset::finish() {
  const std::size_t n = above_.size();
  std::vector<boost::dynamic_bitset<>> below(n, boost::dynamic_bitset<>(n));
  std::vector<std::size_t> nbelow(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = above_[a].find_first(); b != boost::dynamic_bitset<>::npos; b = above_[a].find_next(b)) {
      below[b].set(a);
      ++nbelow[b];
    }
  linear_.resize(n);
  std::iota(linear_.begin(), linear_.end(), 0);
  std::stable_sort(linear_.begin(), linear_.end(), [&](int a, int b) { return nbelow[a] < nbelow[b]; });
  covers_.assign(n, {});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = above_[x].find_first(); y != boost::dynamic_bitset<>::npos; y = above_[x].find_next(y))
      if (!above_[x].intersects(below[y])) covers_[x].push_back(static_cast<int>(y));
  height_.assign(n, 0);
  for (int x : linear_)
    for (int y : covers_[x]) height_[y] = std::max(height_[y], height_[x] + 1);
  ranked_ = true;
  for (std::size_t x = 0; x < n; ++x)
    for (int y : covers_[x])
      if (height_[y] != height_[x] + 1) ranked_ = false;
}

std::optional<int> FinitePoset::minimum() const {
  for (std::size_t x = 0; x < size(); ++x)
    if (above_[x].count() + 1 == size()) return static_cast<int>(x);
  return std::nullopt;
}

std::optional<int> FinitePoset::maximum() const {
  for (std::size_t y = 0; y < size(); ++y) {
    bool top = true;
    for (std::size_t x = 0; x < size() && top; ++x)
      if (x != y && !above_[x].test(y)) top = false;
    if (top) return static_cast<int>(y);
  }
  return std::nullopt;
}

int FinitePoset::length() const {
  int l = 0;
  for (int h : height_) l = std::max(l, h);
  return size() == 0 ? -1 : l;
}

FinitePoset FinitePoset::subposet(const std::vector<int>& ids) const {
  return FinitePoset(ids.size(), [&](int a, int b) { return leq(ids[a], ids[b]); });
}

FinitePoset FinitePoset::proper_part(std::vector<int>* ids) const {
  auto lo = minimum(), hi = maximum();
  std::vector<int> keep;
  for (std::size_t x = 0; x < size(); ++x)
    if ((!lo || static_cast<int>(x) != *lo) && (!hi || static_cast<int>(x) != *hi)) keep.push_back(static_cast<int>(x));
  if (ids) *ids = keep;
  return subposet(keep);
}

FinitePoset FinitePoset::bounded(int* bottom, int* top) const {
  const int n = static_cast<int>(size());
  bool add_bottom = !minimum().has_value() || n == 0;
  bool add_top = !maximum().has_value() || n == 0;
  int b = add_bottom ? n : *minimum();
  int t = add_top ? n + (add_bottom ? 1 : 0) : *maximum();
  if (bottom) *bottom = b;
  if (top) *top = t;
  const int total = n + (add_bottom ? 1 : 0) + (add_top ? 1 : 0);
  return FinitePoset(total, [&](int x, int y) {
    if (x == y) return true;
    if (x == b) return true;
    if (y == t) return true;
    if (x >= n || y >= n) return false;
    return leq(x, y);
  });
}

std::vector<int> FinitePoset::open_interval(int x, int y) const {
  std::vector<int> out;
  for (std::size_t z = above_[x].find_first(); z != boost::dynamic_bitset<>::npos; z = above_[x].find_next(z))
    if (above_[z].test(y)) out.push_back(static_cast<int>(z));
  return out;
}

std::vector<long long> FinitePoset::mobius_from(int x) const {
  std::vector<long long> mu(size(), 0);
  mu[x] = 1;
  std::vector<int> order;
  for (int z : linear_)
    if (above_[x].test(z)) order.push_back(z);
  std::vector<int> seen{x};
  for (int y : order) {
    long long s = 0;
    for (int z : seen)
      if (less(z, y)) s += mu[z];
    mu[y] = -s;
    seen.push_back(y);
  }
  return mu;
}

long long FinitePoset::mobius(int x, int y) const {
  if (!leq(x, y)) throw NotComparable("mobius(x, y) needs x <= y");
  return mobius_from(x)[y];
}

AbstractComplex order_complex(const FinitePoset& p) {
  std::vector<Face> faces;
  std::vector<int> chain;
  std::function<void(int)> extend = [&](int x) {
    chain.push_back(x);
    Face f = chain;
    std::sort(f.begin(), f.end());
    faces.push_back(std::move(f));
    const auto& up = p.strictly_above(x);
    for (std::size_t y = up.find_first(); y != boost::dynamic_bitset<>::npos; y = up.find_next(y))
      extend(static_cast<int>(y));
    chain.pop_back();
  };
  for (std::size_t x = 0; x < p.size(); ++x) extend(static_cast<int>(x));
  return AbstractComplex::from_faces(faces);
}

BigInt multichain_count(const FinitePoset& p, int m, const std::vector<int>& action,
                        const std::function<bool(int)>& start) {
  if (m < 1) throw std::invalid_argument("multichain length must be >= 1");
  const std::size_t n = p.size();
  std::vector<char> fixed(n, 1);
  if (!action.empty()) {
    if (action.size() != n) throw NotAnAutomorphism("action has wrong size");
    std::vector<char> hit(n, 0);
    for (int a : action) {
      if (a < 0 || static_cast<std::size_t>(a) >= n || hit[a]) throw NotAnAutomorphism("action is not a permutation");
      hit[a] = 1;
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (p.leq(static_cast<int>(a), static_cast<int>(b)) != p.leq(action[a], action[b]))
          throw NotAnAutomorphism("action does not preserve the order");
    for (std::size_t a = 0; a < n; ++a) fixed[a] = action[a] == static_cast<int>(a);
  }
  std::vector<BigInt> v(n, BigInt(0));
  for (std::size_t x = 0; x < n; ++x)
    if (fixed[x] && (!start || start(static_cast<int>(x)))) v[x] = 1;
  for (int step = 1; step < m; ++step) {
    std::vector<BigInt> w(n, BigInt(0));
    for (std::size_t x = 0; x < n; ++x) {
      if (!fixed[x] || sgn(v[x]) == 0) continue;
      w[x] += v[x];
      const auto& up = p.strictly_above(static_cast<int>(x));
      for (std::size_t y = up.find_first(); y != boost::dynamic_bitset<>::npos; y = up.find_next(y))
        if (fixed[y]) w[y] += v[x];
    }
    v = std::move(w);
  }
  BigInt total = 0;
  for (auto& x : v) total += x;
  return total;
}

Rational zeta_polynomial_value(const FinitePoset& p, long x) {
  const int points = p.length() + 2;
  std::vector<Rational> xs, ys;
  for (int m = 1; m <= points; ++m) {
    xs.emplace_back(m);
    ys.emplace_back(multichain_count(p, m));
  }
  Rational total = 0;
  for (int i = 0; i < points; ++i) {
    Rational term = ys[i];
    for (int j = 0; j < points; ++j)
      if (j != i) term *= (Rational(x) - xs[j]) / (xs[i] - xs[j]);
    total += term;
  }
  return total;
}

CmReport homology_cm_check(const FinitePoset& p) {
  if (!p.is_ranked()) throw NotRanked("poset is not ranked");
  FinitePoset hat = p.bounded();
  if (!hat.is_ranked()) throw NotRanked("bounded poset is not ranked");
  CmReport rep;
  for (std::size_t x = 0; x < hat.size(); ++x) {
    const auto& up = hat.strictly_above(static_cast<int>(x));
    for (std::size_t y = up.find_first(); y != boost::dynamic_bitset<>::npos; y = up.find_next(y)) {
      auto inside = hat.open_interval(static_cast<int>(x), static_cast<int>(y));
      if (inside.empty()) continue;
      ++rep.intervals_checked;
      int expect = hat.rank(static_cast<int>(y)) - hat.rank(static_cast<int>(x)) - 2;
      auto prof = homology(order_complex(hat.subposet(inside)));
      if (!prof.concentrated_in(expect))
        rep.violations.push_back({static_cast<int>(x), static_cast<int>(y),
                                  "homology not concentrated in degree " + std::to_string(expect)});
    }
  }
  return rep;
}

}  // namespace coxcat
