#include "coxcat/catalan.hpp"

#include <stdexcept>

#include "coxcat/enumerative.hpp"
#include "coxcat/errors.hpp"

namespace coxcat {

CatalanArrangement::CatalanArrangement(std::shared_ptr<const Group> g, int m) : g_(std::move(g)), m_(m) {
  if (!g_->datum().crystallographic()) throw NonCrystallographic(g_->datum().type_label + " is not a Weyl group");
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  const auto& rs = g_->roots();
  arr_.dim = rank();
  for (RootId r = 0; r < static_cast<RootId>(rs.num_positive()); ++r) {
    RationalVector normal;
    for (const auto& c : rs.coords(r)) normal.push_back(c.rational_value());
    for (int k = -m; k <= m; ++k) {
      hyperplanes_.push_back({r, k});
      arr_.add(normal, k);
    }
  }
}

Rational CatalanArrangement::evaluate(int h, const RationalVector& x) const {
  Rational v = -arr_.levels[h];
  const auto& a = arr_.normals[h];
  for (std::size_t i = 0; i < a.size(); ++i) v += a[i] * x[i];
  return v;
}

SignVector CatalanArrangement::signs(const RationalVector& x) const {
  SignVector s(size());
  for (std::size_t h = 0; h < size(); ++h) s[h] = static_cast<signed char>(sgn(evaluate(static_cast<int>(h), x)));
  return s;
}

RationalVector CatalanArrangement::act(ElementId w, const RationalVector& x) const {
  // <alpha_i, w x> = <w^-1 alpha_i, x>
  const auto& rs = g_->roots();
  const ElementId wi = g_->inverse(w);
  RationalVector y(rank(), 0);
  for (int i = 0; i < rank(); ++i) {
    const auto& c = rs.coords(g_->act(wi, rs.simple(i)));
    for (int j = 0; j < rank(); ++j) y[i] += c[j].rational_value() * x[j];
  }
  return y;
}

std::optional<RationalVector> CatalanArrangement::realize(const SignVector& s, int count) const {
  if (count < 0) count = static_cast<int>(s.size());
  RationalMatrix rows;
  RationalVector rhs;
  for (int h = 0; h < count; ++h) {
    // s (a.x - k) > 0  <=>  -s a.x < -s k
    RationalVector row;
    for (const auto& c : arr_.normals[h]) row.push_back(-s[h] * c);
    rows.push_back(std::move(row));
    rhs.push_back(-s[h] * arr_.levels[h]);
  }
  return strict_feasible_point(rows, rhs, static_cast<std::size_t>(rank()));
}

std::vector<Region> enumerate_regions(const CatalanArrangement& a) {
  std::vector<Region> regions{{{}, RationalVector(a.rank(), 0)}};
  for (int h = 0; h < static_cast<int>(a.size()); ++h) {
    std::vector<Region> next;
    for (auto& r : regions) {
      const int v = sgn(a.evaluate(h, r.witness));
      for (signed char side : {1, -1}) {
        SignVector s = r.sign;
        s.push_back(side);
        if (v == side) {
          next.push_back({std::move(s), r.witness});
          continue;
        }
        auto p = a.realize(s, h + 1);
        if (!p) {
          if (v == 0) throw std::logic_error("hyperplane through a witness misses a side");
          continue;
        }
        next.push_back({std::move(s), std::move(*p)});
      }
    }
    regions = std::move(next);
  }
  return regions;
}

RegionStats walls_floors(const CatalanArrangement& a, const SignVector& s) {
  RegionStats st;
  for (int h = 0; h < static_cast<int>(a.size()); ++h) {
    SignVector t = s;
    t[h] = static_cast<signed char>(-t[h]);
    if (!a.realize(t)) continue;
    st.walls.push_back(h);
    const int k = a.hyperplanes()[h].level;
    // the origin has sign of -k; a floor puts R on the other side
    if (k == 0 || s[h] != (k > 0 ? 1 : -1)) continue;
    st.floors.push_back(h);
    if (k == a.m()) st.m_floors.push_back(h);
  }
  return st;
}

bool is_dominant(const CatalanArrangement& a, const SignVector& s) {
  for (std::size_t h = 0; h < a.size(); ++h)
    if (a.hyperplanes()[h].level == 0 && s[h] < 0) return false;
  return true;
}

CatalanRegions::CatalanRegions(std::shared_ptr<const Group> g, int m) : arr_(std::move(g), m) {
  regions_ = enumerate_regions(arr_);
  for (std::size_t i = 0; i < regions_.size(); ++i) {
    const auto& s = regions_[i].sign;
    if (!index_.emplace(s, static_cast<int>(i)).second) throw std::logic_error("duplicate region");
    stats_.push_back(walls_floors(arr_, s));
    if (is_dominant(arr_, s)) dominant_.push_back(static_cast<int>(i));
  }
}

int CatalanRegions::index_of(const SignVector& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : it->second;
}

int CatalanRegions::act(ElementId w, int region) const {
  const int j = index_of(arr_.signs(arr_.act(w, regions_[region].witness)));
  if (j < 0) throw std::logic_error("W does not permute the regions");
  return j;
}

Polynomial CatalanRegions::mfl_polynomial(bool dominant_only) const {
  const int n = arr_.rank();
  Polynomial out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (dominant_only && !is_dominant(arr_, regions_[i].sign)) continue;
    out += Polynomial::monomial(1, n - stats_[i].mfl());
  }
  return out;
}

PolynomialIdentity dominant_mfl_identity(const CatalanRegions& r, const ClusterComplex& d) {
  return {Polynomial::from_ints(h_vector(d.complex())), r.mfl_polynomial(true)};
}

PolynomialIdentity all_mfl_identity(const CatalanRegions& r, const Polynomial& h_cpf) {
  return {h_cpf, r.mfl_polynomial(false)};
}

OrbitLemmaReport orbit_lemma_check(const CatalanRegions& r, int region) {
  const Group& g = r.group();
  const auto& rs = g.roots();
  const int n = g.rank();
  RationalMatrix span;
  for (int h : r.stats(region).m_floors) {
    RationalVector v;
    for (const auto& c : rs.coords(r.arrangement().hyperplanes()[h].root)) v.push_back(c.rational_value());
    span.push_back(std::move(v));
  }
  const int base_rank = matrix_rank(span, n);
  std::vector<ElementId> refl;
  for (RootId b = 0; b < static_cast<RootId>(rs.num_positive()); ++b) {
    RationalMatrix m = span;
    RationalVector v;
    for (const auto& c : rs.coords(b)) v.push_back(c.rational_value());
    m.push_back(std::move(v));
    if (matrix_rank(m, n) == base_rank) refl.push_back(g.reflection(b));
  }
  const auto sub = generate_subgroup(g, refl);
  ElementId deepest = g.identity();
  for (ElementId w : sub)
    if (g.reflection_length(w) > g.reflection_length(deepest)) deepest = w;
  const auto p = pointwise_stabilizer(g, g.fixed_space(deepest));
  if (p.order() != sub.size()) throw std::logic_error("m-floor reflections do not generate a parabolic");

  OrbitLemmaReport rep;
  rep.region = region;
  rep.parabolic_order = p.order();
  for (ElementId w = 0; w < static_cast<ElementId>(g.order()); ++w)
    rep.distribution += Polynomial::monomial(1, r.stats(r.act(w, region)).mfl());
  rep.expected = Polynomial::monomial(BigInt(static_cast<unsigned long>(g.order() / p.order())), 0) *
                 descent_polynomial(g, p);
  return rep;
}

std::size_t closure_violations(const CatalanRegions& r) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto& walls = r.stats(static_cast<int>(i)).walls;
    std::size_t next = 0;
    for (int h = 0; h < static_cast<int>(r.arrangement().size()); ++h) {
      SignVector t = r.region(static_cast<int>(i)).sign;
      t[h] = static_cast<signed char>(-t[h]);
      const bool wall = next < walls.size() && walls[next] == h;
      if (wall) ++next;
      if ((r.index_of(t) >= 0) != wall) ++bad;
    }
  }
  return bad;
}

}  // namespace coxcat
