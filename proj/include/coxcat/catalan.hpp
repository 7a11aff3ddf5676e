#pragma once

#include <map>
#include <memory>
#include <vector>

#include "coxcat/arrangement.hpp"
#include "coxcat/cluster.hpp"
#include "coxcat/lp.hpp"
#include "coxcat/polynomial.hpp"

namespace coxcat {

struct CatalanHyperplane {
  RootId root;  // positive
  int level;    // -m..m
};

using SignVector = std::vector<signed char>;

struct Region {
  SignVector sign;  // sign of <alpha, x> - k per hyperplane, never 0
  RationalVector witness;
};

struct RegionStats {
  std::vector<int> walls, floors, m_floors;
  int mfl() const { return static_cast<int>(m_floors.size()); }
};

// Cat^(m)(W) for a crystallographic W. Points x are given by the values
// <alpha_i, x> on the simple roots, so <alpha, x> is the root coordinate
// vector of alpha dotted with x.
class CatalanArrangement {
 public:
  CatalanArrangement(std::shared_ptr<const Group> g, int m);

  const Group& group() const { return *g_; }
  int m() const { return m_; }
  int rank() const { return g_->rank(); }
  std::size_t size() const { return hyperplanes_.size(); }
  const std::vector<CatalanHyperplane>& hyperplanes() const { return hyperplanes_; }
  const Arrangement& arrangement() const { return arr_; }
  // <alpha, x> - k
  Rational evaluate(int h, const RationalVector& x) const;
  SignVector signs(const RationalVector& x) const;  // zero entries possible
  // Point w.x.
  RationalVector act(ElementId w, const RationalVector& x) const;
  // Strictly feasible point of the sign vector restricted to the first
  // `count` hyperplanes (all if negative).
  std::optional<RationalVector> realize(const SignVector& s, int count = -1) const;

 private:
  std::shared_ptr<const Group> g_;
  int m_;
  std::vector<CatalanHyperplane> hyperplanes_;
  Arrangement arr_;
};

// Incremental enumeration: hyperplanes are inserted one at a time and each
// region meeting the new hyperplane is split, with LP witnesses.
std::vector<Region> enumerate_regions(const CatalanArrangement& a);

// Walls by LP (flipping the sign stays feasible); floors and m-floors from them.
RegionStats walls_floors(const CatalanArrangement& a, const SignVector& s);
bool is_dominant(const CatalanArrangement& a, const SignVector& s);

class CatalanRegions {
 public:
  CatalanRegions(std::shared_ptr<const Group> g, int m);

  const CatalanArrangement& arrangement() const { return arr_; }
  const Group& group() const { return arr_.group(); }
  std::size_t size() const { return regions_.size(); }
  const Region& region(int i) const { return regions_[i]; }
  const RegionStats& stats(int i) const { return stats_[i]; }
  int index_of(const SignVector& s) const;
  const std::vector<int>& dominant() const { return dominant_; }
  int act(ElementId w, int region) const;
  // sum z^{n - mfl(R)} over all regions or over dominant ones.
  Polynomial mfl_polynomial(bool dominant_only) const;

 private:
  CatalanArrangement arr_;
  std::vector<Region> regions_;
  std::vector<RegionStats> stats_;
  std::map<SignVector, int> index_;
  std::vector<int> dominant_;
};

struct PolynomialIdentity {
  Polynomial lhs, rhs;
  bool passed() const { return lhs == rhs; }
};
// h(Delta^(m); z) against the dominant-region statistic.
PolynomialIdentity dominant_mfl_identity(const CatalanRegions& r, const ClusterComplex& d);
// h(CPF^(m); z) (given) against the statistic over all regions.
PolynomialIdentity all_mfl_identity(const CatalanRegions& r, const Polynomial& h_cpf);

struct OrbitLemmaReport {
  int region = 0;
  std::size_t parabolic_order = 0;  // |W_X|
  Polynomial distribution, expected;
  bool passed() const { return distribution == expected; }
};
// sum_w z^{mfl(w R)} against [W : W_X] Des(W_X; z), X parallel to the
// intersection of the m-floors of the dominant region R.
OrbitLemmaReport orbit_lemma_check(const CatalanRegions& r, int region);

// Every flip of a wall gives an enumerated region; every other flip is
// infeasible. Returns the number of violations.
std::size_t closure_violations(const CatalanRegions& r);

}  // namespace coxcat
