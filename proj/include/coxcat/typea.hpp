#pragma once

#include <map>
#include <vector>

#include "coxcat/cluster.hpp"
#include "coxcat/complex.hpp"
#include "coxcat/exact.hpp"

namespace coxcat {

using Partition = std::vector<int>;  // weakly decreasing
using TypeCounts = std::map<Partition, BigInt>;

// m-Dyck paths in the n x mn rectangle as abscissas a_1 <= ... <= a_n of the
// vertical steps, a_i <= m(i-1); prime paths have a_{i+1} < m i for 1 <= i < n.
std::vector<std::vector<int>> dyck_paths(int n, int m, bool prime);
Partition path_type(const std::vector<int>& abscissas);
TypeCounts count_dyck_by_type(int n, int m, bool prime);

// prod_{i=1}^{l-1} (mn +- 1 - i) / prod_i mu_i!, '+' for K and '-' for K';
// m may be negative.
BigInt k_formula(int n, int m, const Partition& lambda, bool prime);
std::vector<Partition> partitions(int n);

// Parking functions counted as maps cars -> columns whose sorted columns
// form an m-Dyck path (prime: a prime path).
BigInt classical_parking_count(int n, int m, bool prime);

// Dissections of the (mn+2)-gon into (mk+2)-gons, as sets of diagonals (i, j),
// i < j, with j - i = 1 mod m.
using Diagonal = std::pair<int, int>;
struct Dissection {
  std::vector<Diagonal> diagonals;
  std::vector<std::vector<int>> cells;  // polygon vertices of each inner polygon
  Partition type;
};
std::vector<Dissection> dissections(int n, int m);
TypeCounts count_dissections_by_type(int n, int m);

// Faces of the labeled-dissection complex realized on vertices
// (diagonal, labels on the arc i..j); f-vector comparable with CPF(A_{n-1}).
AbstractComplex labeled_dissection_complex(int n, int m);

// Permutation (0-based one-line) of w in type A_{n-1}: w(e_i - e_{i+1}) = e_{w(i)} - e_{w(i+1)}.
std::vector<int> permutation_of(const Group& g, ElementId w);
// Cycles of w as sorted blocks (1-based), sorted by smallest element.
std::vector<std::vector<int>> blocks_of(const Group& g, ElementId w);
// Face counts of Delta^(m)(A_{n-1}) by cycle type of underline f.
TypeCounts cluster_type_counts(const ClusterComplex& d, bool positive_only);

}  // namespace coxcat
