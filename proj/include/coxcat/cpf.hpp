#pragma once

#include <memory>
#include <string>
#include <vector>

#include "coxcat/cluster.hpp"
#include "coxcat/parking.hpp"

namespace coxcat {

// A face of CPF: a cluster face f with a coset of W_{underline f} (PF id).
struct CpfFace {
  Face cluster;
  int coset;
};

// Simplicial realization of CPF^(m) (or CPF^(m),+). Vertices are the rank-1
// faces, keyed by (cluster vertex, coset of its underline parabolic).
class CpfComplex {
 public:
  CpfComplex(std::shared_ptr<const ClusterComplex> delta, bool positive_only);

  const ClusterComplex& delta() const { return *delta_; }
  const ParkingPoset& pf() const { return *pf_; }
  const Group& group() const { return delta_->group(); }
  bool positive_only() const { return positive_; }
  const AbstractComplex& complex() const { return complex_; }
  std::size_t num_vertices() const { return vertex_key_.size(); }
  // (cluster vertex, PF id) of a realization vertex.
  const std::pair<int, int>& vertex_key(int v) const { return vertex_key_[v]; }
  const CpfFace& face_data(const Face& realized) const;

  // Image of a realization vertex under w.
  int act_vertex(ElementId w, int v) const;
  bool fixes(ElementId w, const Face& realized) const;
  // Faces fixed by g; throws NotAdmissible if not closed under subfaces.
  AbstractComplex fixed_subcomplex(ElementId g) const;
  long long signed_fixed_count(ElementId g) const;

 private:
  std::shared_ptr<const ClusterComplex> delta_;
  std::shared_ptr<const ParkingPoset> pf_;
  bool positive_;
  std::vector<std::pair<int, int>> vertex_key_;
  std::map<std::pair<int, int>, int> vertex_id_;
  AbstractComplex complex_;
  std::unordered_map<Face, CpfFace, FaceHash> data_;
};

// (-1)^{n-1} (-1)^{l(g)} (mh +- 1)^{n - l(g)}, l the reflection length.
long long predicted_lefschetz(const Group& g, int m, bool positive_only, ElementId w);

struct LefschetzResult {
  long long signed_count = 0;
  long long fixed_euler = 0;  // from the homology of the fixed subcomplex
  long long predicted = 0;
  bool passed() const { return signed_count == predicted && fixed_euler == predicted; }
};
LefschetzResult lefschetz(const CpfComplex& cpf, ElementId g);

// Face count per size: sum over cluster faces of [W : W_{underline f}].
std::vector<long long> orbit_face_counts(const ClusterComplex& d, bool positive_only);

struct FvectorCheck {
  std::vector<long long> actual, expected;
  std::string detail;
  bool passed() const { return actual == expected; }
};
// Link of a realization face against CPF^(m) of W_{underline f}; full complex only.
FvectorCheck cpf_link_check(const CpfComplex& cpf, const Face& realized);
// CPF of a product datum against the join of the factors' complexes.
FvectorCheck cpf_join_check(const CoxeterDatum& a, const CoxeterDatum& b, int m);
// f-vector of the Coxeter complex: faces are cosets of standard parabolics.
std::vector<long long> coxeter_complex_fvector(const Group& g);

struct FlagReport {
  bool flag = true;
  std::size_t cliques_checked = 0;
  Face missing;  // a pairwise adjacent set that is not a face
};
FlagReport flag_report(const AbstractComplex& c);

// Homology CM test on the face poset with bounds added.
CmReport cpf_cm_check(const CpfComplex& cpf);

// f_i(CPF^+) (faces of size i) and (-1)^i w_i(PF), i = 0..n; m = 1 only.
std::pair<std::vector<long long>, std::vector<long long>> whitney_check(const CpfComplex& plus);

std::shared_ptr<const CpfComplex> build_cpf(const CoxeterDatum& datum, int m, bool positive_only);

}  // namespace coxcat
