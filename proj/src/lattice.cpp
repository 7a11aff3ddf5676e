#include "coxcat/lattice.hpp"

#include <stdexcept>

namespace coxcat {

IntersectionLattice::IntersectionLattice(const Group& g) : g_(&g) {
  std::map<Flat, int> seen;
  for (ElementId w = 0; w < static_cast<ElementId>(g.order()); ++w) seen.emplace(g.fixed_space(w), 0);
  for (auto& [f, idx] : seen) {
    idx = static_cast<int>(flats_.size());
    flats_.push_back(f);
  }
  index_ = seen;
  of_element_.resize(g.order());
  for (ElementId w = 0; w < static_cast<ElementId>(g.order()); ++w) of_element_[w] = index_.at(g.fixed_space(w));

  const std::size_t n = flats_.size();
  action_.resize(g.order() * n);
  for (ElementId w = 0; w < static_cast<ElementId>(g.order()); ++w)
    for (std::size_t i = 0; i < n; ++i) {
      ScalarMatrix rows;
      for (const auto& b : flats_[i].basis) rows.push_back(g.apply(w, b));
      Flat img = Flat::span(rows, g.rank(), g.roots().field());
      action_[static_cast<std::size_t>(w) * n + i] = index_.at(img);
    }
  orbit_.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (orbit_[i] >= 0) continue;
    for (ElementId w = 0; w < static_cast<ElementId>(g.order()); ++w) orbit_[act(w, static_cast<int>(i))] = static_cast<int>(i);
  }
  setwise_.resize(n);
  for (ElementId w = 0; w < static_cast<ElementId>(g.order()); ++w)
    for (std::size_t i = 0; i < n; ++i)
      if (act(w, static_cast<int>(i)) == static_cast<int>(i)) setwise_[i].push_back(w);
  for (const auto& f : flats_) stab_.push_back(pointwise_stabilizer(g, f));
  poset_ = FinitePoset(n, [&](int a, int b) { return flats_[b].subset_of(flats_[a]); });
}

int IntersectionLattice::index_of(const Flat& f) const {
  auto it = index_.find(f);
  return it == index_.end() ? -1 : it->second;
}

}  // namespace coxcat
