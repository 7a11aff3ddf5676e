#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxcat/roots.hpp"

namespace coxcat {

using ElementId = int;
using Bitset = boost::dynamic_bitset<>;

// A linear subspace of V (simple-root coordinates), stored as canonical RREF rows.
struct Flat {
  int ambient = 0;
  ScalarMatrix basis;
  std::vector<int> pivots;

  int dim() const { return static_cast<int>(basis.size()); }
  static Flat span(ScalarMatrix rows, int ambient, const FieldPtr& field);
  static Flat whole(int ambient, const FieldPtr& field);
  bool contains(const ScalarVector& v) const;
  bool subset_of(const Flat& other) const;
  bool operator==(const Flat& o) const;
  bool operator!=(const Flat& o) const { return !(*this == o); }
  bool operator<(const Flat& o) const;
};

class Group {
 public:
  explicit Group(std::shared_ptr<const RootSystem> roots);
  static std::shared_ptr<const Group> build(const CoxeterDatum& datum, Arithmetic mode = Arithmetic::Auto);

  const RootSystem& roots() const { return *roots_; }
  const CoxeterDatum& datum() const { return roots_->datum(); }
  int rank() const { return roots_->rank(); }
  std::size_t order() const { return length_.size(); }
  ElementId identity() const { return 0; }
  ElementId generator(int i) const { return gens_[i]; }

  ElementId multiply(ElementId a, ElementId b) const;
  ElementId multiply(std::initializer_list<ElementId> xs) const;
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  ElementId conjugate(ElementId g, ElementId x) const;  // g x g^-1
  RootId act(ElementId w, RootId r) const { return perm_[static_cast<std::size_t>(w) * nroots_ + r]; }
  ElementId find(const std::vector<RootId>& perm) const;
  ElementId from_word(const std::vector<int>& word) const;

  int coxeter_length(ElementId w) const { return length_[w]; }
  int reflection_length(ElementId w) const { return refl_length_[w]; }
  // Right inversions {a > 0 : w(a) < 0}.
  std::vector<RootId> inversion_set(ElementId w) const;
  // Left inversions {a > 0 : w^-1(a) < 0}; these partition with those of w w_o.
  std::vector<RootId> left_inversion_set(ElementId w) const { return inversion_set(inverse(w)); }
  bool left_inverts(ElementId w, RootId positive) const { return inverts(inverse(w), positive); }
  bool inverts(ElementId w, RootId positive) const { return !roots_->is_positive(act(w, positive)); }
  std::vector<int> left_descents(ElementId w) const;
  std::vector<int> reduced_word(ElementId w) const;
  ElementId longest() const { return longest_; }

  ElementId reflection(RootId r) const;
  // Positive root of a reflection, -1 for non-reflections.
  RootId reflection_root(ElementId w) const { return refl_root_[w]; }
  const std::vector<ElementId>& reflections() const { return reflections_; }

  ScalarMatrix matrix(ElementId w) const;
  const Flat& fixed_space(ElementId w) const { return fixed_[w]; }
  // X subset of V^w, checked vector by vector.
  bool fixes(ElementId w, const Flat& x) const;
  ScalarVector apply(ElementId w, const ScalarVector& v) const;

 private:
  std::shared_ptr<const RootSystem> roots_;
  std::size_t nroots_ = 0;
  std::vector<std::uint16_t> perm_;
  std::unordered_map<std::string, ElementId> lookup_;
  std::vector<ElementId> gens_, inverse_, reflections_, refl_root_;
  std::vector<int> length_, refl_length_;
  std::vector<ElementId> table_;  // dense multiplication table when small
  std::vector<Flat> fixed_;
  ElementId longest_ = 0;

  std::string key(const std::uint16_t* p) const;
  ElementId compose_lookup(ElementId a, ElementId b) const;
};

struct ParabolicSubgroup {
  std::vector<ElementId> elements;  // sorted
  Bitset member;
  Flat flat;
  std::size_t index_in_w = 0;
  bool contains(ElementId w) const { return member.test(w); }
  std::size_t order() const { return elements.size(); }
};

ParabolicSubgroup pointwise_stabilizer(const Group& g, const Flat& flat);
std::vector<ElementId> generate_subgroup(const Group& g, const std::vector<ElementId>& gens);
ParabolicSubgroup standard_parabolic(const Group& g, const std::vector<int>& simple_indices);
ElementId min_coset_rep(const Group& g, ElementId w, const ParabolicSubgroup& p);

// Simple system of a reflection subgroup: positive roots r of the subgroup
// with Inv(t_r) meeting its positive roots only in r.
struct SubgroupSystem {
  std::vector<RootId> positive_roots;
  std::vector<RootId> simple_roots;
  CoxeterDatum datum;
};
SubgroupSystem subgroup_system(const Group& g, const ParabolicSubgroup& p);

struct CoxeterElements {
  ElementId bullet, circle, c;
};
// c = c_bullet c_circle for the datum's bipartition.
CoxeterElements bipartite_coxeter(const Group& g);

}  // namespace coxcat
