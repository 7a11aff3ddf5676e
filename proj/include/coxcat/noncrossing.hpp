#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "coxcat/group.hpp"
#include "coxcat/poset.hpp"

namespace coxcat {

// v >= w in absolute order: l(v) + l(v^-1 w) = l(w). The identity is the top.
bool abs_geq(const Group& g, ElementId v, ElementId w);

// True iff w is a product of all simple reflections, each used once.
bool is_standard_coxeter(const Group& g, ElementId w);

// NC = {w : w >= c}, ordered with c at the bottom and e at the top.
// Elements carry dense ids 0..size-1 sorted by reflection length, descending.
class NoncrossingLattice {
 public:
  // Uses the bipartite Coxeter element when c is omitted.
  explicit NoncrossingLattice(std::shared_ptr<const Group> g, std::optional<ElementId> c = std::nullopt);

  const Group& group() const { return *g_; }
  std::shared_ptr<const Group> group_ptr() const { return g_; }
  ElementId coxeter() const { return c_; }
  bool bipartite() const { return bipartite_; }
  const CoxeterElements& factors() const { return factors_; }

  std::size_t size() const { return elems_.size(); }
  ElementId element(int i) const { return elems_[i]; }
  const std::vector<ElementId>& elements() const { return elems_; }
  // -1 when w is not in NC.
  int index_of(ElementId w) const;
  int rank(int i) const { return g_->rank() - g_->reflection_length(elems_[i]); }
  int bottom() const { return 0; }
  int top() const { return static_cast<int>(size()) - 1; }

  bool leq(int i, int j) const { return poset_.leq(i, j); }
  const FinitePoset& poset() const { return poset_; }
  // Proper part (c and e removed); ids receives NC ids.
  FinitePoset proper_part(std::vector<int>* ids = nullptr) const { return poset_.proper_part(ids); }

  // c_bullet pi c_circle; throws NotBipartite for other Coxeter elements.
  int kreweras(int i) const;
  ElementId kreweras_element(ElementId pi) const;
  const ParabolicSubgroup& parabolic(int i) const { return parabolic_[i]; }

  // Join through W_{a v b} = W_a cap W_b; meet as the greatest lower bound.
  int join(int a, int b) const;
  int meet(int a, int b) const;
  // Least upper bound found by scanning (used to cross-check join).
  std::optional<int> join_by_scan(int a, int b) const;

  bool is_prime(int i) const;
  std::vector<int> atoms() const;
  // Ids of the reflections (coatoms).
  std::vector<int> reflections() const;

  // Order ideal of the proper part generated by t_alpha, alpha a left inversion of w.
  // ids receives NC ids. Throws IdentityElement for w = e.
  FinitePoset inversion_ideal(ElementId w, std::vector<int>* ids = nullptr) const;

 private:
  std::shared_ptr<const Group> g_;
  ElementId c_;
  bool bipartite_ = false;
  CoxeterElements factors_{};
  std::vector<ElementId> elems_;
  std::vector<int> index_;
  std::vector<ParabolicSubgroup> parabolic_;
  std::map<Bitset, int> by_parabolic_;
  FinitePoset poset_;
};

}  // namespace coxcat
