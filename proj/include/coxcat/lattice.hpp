#pragma once

#include <map>
#include <vector>

#include "coxcat/group.hpp"
#include "coxcat/poset.hpp"

namespace coxcat {

// L = {V^w}, ordered by reverse inclusion. Flat 0 is V; flats sorted by
// decreasing dimension.
class IntersectionLattice {
 public:
  explicit IntersectionLattice(const Group& g);

  const Group& group() const { return *g_; }
  std::size_t size() const { return flats_.size(); }
  const Flat& flat(int i) const { return flats_[i]; }
  int index_of(const Flat& f) const;
  int of_element(ElementId w) const { return of_element_[w]; }
  const ParabolicSubgroup& stabilizer(int i) const { return stab_[i]; }
  const std::vector<ElementId>& setwise_stabilizer(int i) const { return setwise_[i]; }
  int act(ElementId w, int i) const { return action_[static_cast<std::size_t>(w) * size() + i]; }
  int orbit(int i) const { return orbit_[i]; }  // smallest index in the orbit
  const FinitePoset& poset() const { return poset_; }
  int whole() const { return 0; }
  int origin() const { return static_cast<int>(size()) - 1; }

 private:
  const Group* g_;
  std::vector<Flat> flats_;
  std::map<Flat, int> index_;
  std::vector<int> of_element_, action_, orbit_;
  std::vector<ParabolicSubgroup> stab_;
  std::vector<std::vector<ElementId>> setwise_;
  FinitePoset poset_;
};

}  // namespace coxcat
