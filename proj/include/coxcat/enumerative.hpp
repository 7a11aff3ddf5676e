#pragma once

#include <map>
#include <string>
#include <vector>

#include "coxcat/arrangement.hpp"
#include "coxcat/cluster.hpp"
#include "coxcat/lattice.hpp"
#include "coxcat/polynomial.hpp"

namespace coxcat {

// chi(A^X, t) as a Mobius sum over the subflats of X.
Polynomial char_poly_restriction(const IntersectionLattice& l, int x);
// Integer roots of chi(A^X, t), sorted; throws NonIntegerRoots.
std::vector<long long> os_exponents(const IntersectionLattice& l, int x);

// Generating polynomial of left descents over the parabolic, taken with
// respect to its own simple system.
Polynomial descent_polynomial(const Group& g, const ParabolicSubgroup& p);

// Per W-orbit data of the intersection lattice, computed once per orbit.
struct FlatOrbit {
  int representative = 0;
  int dim = 0;
  std::size_t size = 0;  // number of flats in the orbit
  std::vector<long long> exponents;
  Polynomial descent;
  std::size_t stabilizer_order = 0;  // |W_X|
  std::size_t normalizer_order = 0;  // |N(X)|
  std::string type;
};
std::vector<FlatOrbit> flat_orbits(const IntersectionLattice& l);

// sum_X prod (mh +- 1 + b_i^X) z^{dim X}; throws ReducibleGroup.
Polynomial f_poly_formula(const IntersectionLattice& l, int m, bool positive_only);
Polynomial f_poly_formula(const Group& g, int m, bool positive_only);
// sum_X prod (mh +- 1 - b_i^X) z^{dim X} Des(W_X; z); throws ReducibleGroup.
Polynomial h_poly_formula(const IntersectionLattice& l, int m, bool positive_only);
Polynomial h_poly_formula(const Group& g, int m, bool positive_only);

// Faces of Delta^(m) grouped by the orbit of the flat of W_{underline f},
// against prod(mh +- 1 + b_i^X) / [N(X) : W_X].
struct OrbitCountRow {
  int representative = 0;
  std::string type;
  BigInt actual, expected;
};
std::vector<OrbitCountRow> orbit_type_counts(const ClusterComplex& d, const IntersectionLattice& l,
                                             bool positive_only);

// prod(t + b_i^X) = sum_{Y <= X} prod(t - b_i^Y) r(A^X_Y) for every flat X;
// returns the flats where it fails.
std::vector<int> kung_product_failures(const IntersectionLattice& l, long t);

// Q_n(z) = (1-z)^{2n+1} sum_i i^n/(n+1) binom(n+i, i) z^i, n >= 1.
Polynomial quasi_stirling(int n);

}  // namespace coxcat
