#include "coxcat/roots.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "coxcat/errors.hpp"

namespace coxcat {

namespace {

ScalarVector reflect(const ScalarMatrix& cartan, int i, const ScalarVector& v) {
  ExactScalar pairing = cartan[i][0] * v[0];
  for (std::size_t j = 1; j < v.size(); ++j) pairing += cartan[i][j] * v[j];
  ScalarVector w = v;
  w[i] -= pairing;
  return w;
}

int root_sign(const ScalarVector& v) {
  int s = 0;
  for (const auto& x : v) {
    int t = x.sign();
    if (t == 0) continue;
    if (s != 0 && t != s) throw std::logic_error("root with mixed-sign coordinates");
    s = t;
  }
  return s;
}

}  // namespace

RootSystem RootSystem::enumerate(const CoxeterDatum& datum, Arithmetic mode, std::size_t max_roots) {
  datum.validate();
  RootSystem rs;
  rs.datum_ = datum;
  const int n = datum.rank;
  if (mode == Arithmetic::Auto) mode = datum.crystallographic() ? Arithmetic::Integer : Arithmetic::Generic;

  rs.cartan_.assign(n, ScalarVector(n));
  if (mode == Arithmetic::Integer) {
    IntMatrix a = integer_cartan(datum);
    rs.field_ = NumberField::rationals();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rs.cartan_[i][j] = ExactScalar(rs.field_, Rational(a[i][j]));
  } else {
    int l = 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (datum.matrix[i][j] >= 4) l = std::lcm(l, datum.matrix[i][j]);
    rs.field_ = NumberField::get(l);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        rs.cartan_[i][j] = i == j ? ExactScalar(rs.field_, Rational(2))
                                  : -ExactScalar::two_cos_pi_over(rs.field_, datum.matrix[i][j]);
  }

  // Closure under simple reflections, remembering how each root was reached.
  std::vector<ScalarVector> found;
  std::vector<std::pair<int, int>> parent;
  std::map<ScalarVector, int, ScalarVectorLess> seen;
  for (int i = 0; i < n; ++i) {
    ScalarVector e(n, ExactScalar(rs.field_, Rational(0)));
    e[i] = ExactScalar(rs.field_, Rational(1));
    seen.emplace(e, static_cast<int>(found.size()));
    found.push_back(e);
    parent.emplace_back(-1, -1);
  }
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      ScalarVector w = reflect(rs.cartan_, i, found[k]);
      if (seen.count(w)) continue;
      if (found.size() >= max_roots)
        throw RootCountExceeded(datum.type_label + " exceeds " + std::to_string(max_roots) + " roots");
      seen.emplace(w, static_cast<int>(found.size()));
      found.push_back(std::move(w));
      parent.emplace_back(i, static_cast<int>(k));
    }
  }

  std::vector<int> pos;
  for (std::size_t k = 0; k < found.size(); ++k)
    if (root_sign(found[k]) > 0) pos.push_back(static_cast<int>(k));
  if (pos.size() * 2 != found.size()) throw std::logic_error("positive roots are not half of the roots");
  std::sort(pos.begin(), pos.end(), [&](int a, int b) {
    for (int i = 0; i < n; ++i) {
      int c = ExactScalar::compare(found[a][i], found[b][i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  const int np = static_cast<int>(pos.size());
  rs.coords_.resize(2 * np);
  std::vector<int> old_to_new(found.size(), -1);
  for (int r = 0; r < np; ++r) {
    rs.coords_[r] = found[pos[r]];
    ScalarVector neg = found[pos[r]];
    for (auto& x : neg) x = -x;
    rs.coords_[np + r] = neg;
    old_to_new[pos[r]] = r;
  }
  for (int r = 0; r < 2 * np; ++r) rs.index_.emplace(rs.coords_[r], r);
  for (std::size_t k = 0; k < found.size(); ++k)
    if (old_to_new[k] < 0) old_to_new[k] = rs.index_.at(found[k]);

  rs.simple_.resize(n);
  for (int i = 0; i < n; ++i) rs.simple_[i] = old_to_new[i];

  rs.descent_.assign(np, {-1, -1});
  for (std::size_t k = 0; k < found.size(); ++k) {
    int r = old_to_new[k];
    if (r >= np) continue;
    rs.descent_[r] = parent[k].first < 0 ? std::make_pair(-1, r)
                                         : std::make_pair(parent[k].first, old_to_new[parent[k].second]);
  }

  rs.simple_action_.assign(n, std::vector<RootId>(2 * np));
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < 2 * np; ++r) rs.simple_action_[i][r] = rs.index_.at(reflect(rs.cartan_, i, rs.coords_[r]));

  if (mode == Arithmetic::Integer) {
    rs.int_coords_.resize(2 * np);
    for (int r = 0; r < 2 * np; ++r)
      for (int i = 0; i < n; ++i) {
        Rational q = rs.coords_[r][i].rational_value();
        if (q.get_den() != 1) throw std::logic_error("non-integral crystallographic root");
        rs.int_coords_[r].push_back(q.get_num().get_si());
      }
  }
  return rs;
}

int RootSystem::simple_index(RootId r) const {
  for (int i = 0; i < rank(); ++i)
    if (simple_[i] == r) return i;
  return -1;
}

RootId RootSystem::find(const ScalarVector& v) const {
  ScalarVector norm;
  norm.reserve(v.size());
  for (const auto& x : v) norm.push_back(x.promoted(field_));
  auto it = index_.find(norm);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::coxeter_number() const {
  if (rank() == 0) return 0;
  return static_cast<int>(size()) / rank();
}

}  // namespace coxcat
