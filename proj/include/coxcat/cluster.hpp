#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "coxcat/complex.hpp"
#include "coxcat/noncrossing.hpp"

namespace coxcat {

// alpha^color with alpha almost positive; negated simples only in color 1.
struct ColoredRoot {
  RootId root;
  int color;
  bool operator==(const ColoredRoot& o) const { return root == o.root && color == o.color; }
};

// Generalized cluster complex Delta^(m) on colored almost positive roots.
// Vertex ids: 0..n-1 are (-alpha_i)^1, then n + (color-1)*N + positive root.
class ClusterComplex {
 public:
  ClusterComplex(std::shared_ptr<const NoncrossingLattice> nc, int m);

  const NoncrossingLattice& nc() const { return *nc_; }
  std::shared_ptr<const NoncrossingLattice> nc_ptr() const { return nc_; }
  const Group& group() const { return nc_->group(); }
  int m() const { return m_; }

  std::size_t num_vertices() const { return vertices_.size(); }
  const ColoredRoot& vertex(int v) const { return vertices_[v]; }
  int vertex_id(ColoredRoot cr) const;
  bool is_positive_vertex(int v) const { return v >= group().rank(); }
  // Positive root of the reflection attached to a vertex.
  RootId reflection_root(int v) const;

  // Rotation R (undefined for m = 0).
  int rotate(int v) const { return rotation_[v]; }
  int rotation_order() const { return rotation_order_; }
  bool compatible(int u, int v) const { return compat_[u][v]; }

  const AbstractComplex& complex() const { return complex_; }
  // Full subcomplex on the positive colored roots.
  AbstractComplex positive() const;

  // Unique ordering product in NC (as an NC id).
  int product(const Face& f) const;
  // Kreweras complement of the product (as an NC id).
  int underline(const Face& f) const;

  // Faces with underline(f) <= pi, optionally restricted to positive vertices.
  AbstractComplex restricted(int pi, bool positive_only) const;

  // #{facets of Delta^+ with every root in Inv(w)}, Inv the left inversion set.
  long long k_w(ElementId w) const;

 private:
  int compute_product(const Face& f) const;

  std::shared_ptr<const NoncrossingLattice> nc_;
  int m_;
  std::vector<ColoredRoot> vertices_;
  std::vector<int> rotation_;
  int rotation_order_ = 0;
  std::vector<std::vector<char>> compat_;
  AbstractComplex complex_;
  std::unordered_map<Face, int, FaceHash> product_;
};

// Cluster complex (m = 1) for the Coxeter element s_{i1}...s_{in} given by its
// word: compatibility is invariant under tau_c = sigma_{i1} ... sigma_{in}, where
// sigma_i fixes -a_j for j != i and acts as s_i elsewhere. Vertex ids as in
// ClusterComplex with m = 1.
struct CoxeterClusters {
  AbstractComplex complex;
  std::vector<RootId> vertex_root;
};
CoxeterClusters c_cluster_complex(const Group& g, const std::vector<int>& word);

// f-vector of the link of f against Delta^(m) of W_{underline f}.
struct LinkCheck {
  std::vector<long long> link_f, expected_f;
  std::string parabolic_type;
  bool passed() const { return link_f == expected_f; }
};
LinkCheck link_fvector_check(const ClusterComplex& d, const Face& f);

// Number of cosets u W_P with w u W_P = u W_P.
long long fixed_cosets(const Group& g, const ParabolicSubgroup& p, ElementId w);

// sum over faces f of (-1)^dim f times the number of fixed cosets of W_{underline f}.
long long alternating_character_sum(const ClusterComplex& d, bool positive_only, ElementId w);

// Parabolic subgroup as a standalone group built on its own Coxeter datum.
std::shared_ptr<const Group> parabolic_group(const Group& g, const ParabolicSubgroup& p, std::string* type = nullptr);

}  // namespace coxcat
