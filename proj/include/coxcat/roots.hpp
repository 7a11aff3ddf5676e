#pragma once

#include <map>
#include <optional>
#include <vector>

#include "coxcat/coxeter.hpp"
#include "coxcat/exact.hpp"

namespace coxcat {

using RootId = int;

enum class Arithmetic { Auto, Integer, Generic };

// Roots in simple-root coordinates. Ids: positives 0..N-1 sorted
// lexicographically by coordinates, then the negative of root i at N+i.
class RootSystem {
 public:
  static RootSystem enumerate(const CoxeterDatum& datum, Arithmetic mode = Arithmetic::Auto,
                              std::size_t max_roots = 50000);

  const CoxeterDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank; }
  std::size_t size() const { return coords_.size(); }
  std::size_t num_positive() const { return coords_.size() / 2; }
  bool is_positive(RootId r) const { return r < static_cast<RootId>(num_positive()); }
  RootId negate(RootId r) const {
    const RootId n = static_cast<RootId>(num_positive());
    return r < n ? r + n : r - n;
  }
  RootId simple(int i) const { return simple_[i]; }
  // Index i if r is the i-th simple root, else -1.
  int simple_index(RootId r) const;
  const ScalarVector& coords(RootId r) const { return coords_[r]; }
  const ExactScalar& coord(RootId r, int i) const { return coords_[r][i]; }
  // Integer coordinates; only for the integer arithmetic path.
  const std::vector<long>& int_coords(RootId r) const { return int_coords_[r]; }
  bool integral() const { return !int_coords_.empty(); }
  const FieldPtr& field() const { return field_; }
  // s_i(r) as a root id.
  RootId reflect_simple(int i, RootId r) const { return simple_action_[i][r]; }
  RootId find(const ScalarVector& v) const;
  // (alpha_i^vee, beta) pairing matrix used by the simple reflections.
  const ScalarMatrix& cartan() const { return cartan_; }
  // Coxeter number |Phi|/n; only meaningful for irreducible data.
  int coxeter_number() const;
  // For each positive root r: a simple index i and a root g with r = s_i(g)
  // and g closer to the simple roots; (-1, r) for simple roots.
  const std::vector<std::pair<int, RootId>>& descent() const { return descent_; }

 private:
  CoxeterDatum datum_;
  FieldPtr field_;
  ScalarMatrix cartan_;
  std::vector<ScalarVector> coords_;
  std::vector<std::vector<long>> int_coords_;
  std::vector<RootId> simple_;
  std::vector<std::vector<RootId>> simple_action_;
  std::vector<std::pair<int, RootId>> descent_;
  std::map<ScalarVector, RootId, ScalarVectorLess> index_;
};

}  // namespace coxcat
