#pragma once

#include <map>
#include <vector>

#include "coxcat/group.hpp"
#include "coxcat/lattice.hpp"
#include "coxcat/polynomial.hpp"
#include "coxcat/poset.hpp"

namespace coxcat {

// Rational affine arrangement: hyperplane i is {x : <normal_i, x> = level_i}.
struct Arrangement {
  int dim = 0;
  std::vector<std::vector<Rational>> normals;
  std::vector<Rational> levels;

  std::size_t size() const { return normals.size(); }
  bool central() const;
  void add(std::vector<Rational> normal, Rational level = 0);
};

// Hyperplanes {alpha = 0} for alpha positive, as functionals in root coordinates.
// Rational datum only.
Arrangement reflection_arrangement(const Group& g);

// Intersection poset ordered by reverse inclusion; element 0 is the ambient
// space, elements sorted by decreasing dimension.
struct IntersectionPoset {
  int ambient = 0;
  std::vector<int> dim;
  std::vector<Bitset> hyperplanes;  // hyperplanes containing the flat (empty for lattices)
  FinitePoset order;

  std::size_t size() const { return dim.size(); }
  // chi of the restriction to flat x: sum_{y >= x} mu(x, y) t^{dim y}.
  Polynomial restriction_char_poly(int x = 0) const;
  // chi of the localization at y inside the restriction to x:
  // sum_{x <= z <= y} mu(x, z) t^{dim z}.
  Polynomial localization_char_poly(int y, int x = 0) const;
};

IntersectionPoset intersection_poset(const Arrangement& a);
IntersectionPoset intersection_poset(const IntersectionLattice& l);

// (-1)^dim chi(-1) for the restriction to x.
BigInt zaslavsky_regions(const IntersectionPoset& p, int x = 0);

struct KungReport {
  int samples = 0;
  int mismatches = 0;
  bool passed() const { return mismatches == 0 && samples > 0; }
};
// Both sides of chi(K, st) = sum_Y chi(K_Y, s) chi(K^Y, t) for the
// restriction to x (central arrangements).
std::pair<BigInt, BigInt> kung_sides(const IntersectionPoset& p, const BigInt& s, const BigInt& t, int x = 0);
// Evaluated on a grid of at least (deg+1)^2 integer pairs.
KungReport kung_identity_check(const IntersectionPoset& p, int x = 0);

}  // namespace coxcat
