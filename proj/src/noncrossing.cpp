#include "coxcat/noncrossing.hpp"

#include <algorithm>
#include <set>

#include "coxcat/errors.hpp"

namespace coxcat {

bool abs_geq(const Group& g, ElementId v, ElementId w) {
  return g.reflection_length(v) + g.reflection_length(g.multiply(g.inverse(v), w)) == g.reflection_length(w);
}

bool is_standard_coxeter(const Group& g, ElementId w) {
  if (g.coxeter_length(w) != g.rank()) return false;
  auto word = g.reduced_word(w);
  std::set<int> support(word.begin(), word.end());
  return static_cast<int>(support.size()) == g.rank();
}

NoncrossingLattice::NoncrossingLattice(std::shared_ptr<const Group> g, std::optional<ElementId> c) : g_(std::move(g)) {
  const Group& grp = *g_;
  factors_ = bipartite_coxeter(grp);
  c_ = c.value_or(factors_.c);
  if (c_ < 0 || c_ >= static_cast<ElementId>(grp.order()) || !is_standard_coxeter(grp, c_))
    throw NotCoxeterElement("element is not a standard Coxeter element");
  bipartite_ = c_ == factors_.c;

  for (ElementId w = 0; w < static_cast<ElementId>(grp.order()); ++w)
    if (abs_geq(grp, w, c_)) elems_.push_back(w);
  std::stable_sort(elems_.begin(), elems_.end(), [&](ElementId a, ElementId b) {
    return grp.reflection_length(a) > grp.reflection_length(b);
  });
  index_.assign(grp.order(), -1);
  for (std::size_t i = 0; i < elems_.size(); ++i) index_[elems_[i]] = static_cast<int>(i);

  poset_ = FinitePoset(elems_.size(), [&](int a, int b) { return abs_geq(grp, elems_[b], elems_[a]); });

  parabolic_.reserve(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    parabolic_.push_back(pointwise_stabilizer(grp, grp.fixed_space(elems_[i])));
    if (!by_parabolic_.emplace(parabolic_.back().member, static_cast<int>(i)).second)
      throw std::logic_error("noncrossing parabolic map is not injective");
  }
}

int NoncrossingLattice::index_of(ElementId w) const {
  if (w < 0 || w >= static_cast<ElementId>(index_.size())) return -1;
  return index_[w];
}

ElementId NoncrossingLattice::kreweras_element(ElementId pi) const {
  if (!bipartite_) throw NotBipartite("Kreweras complement needs the bipartite Coxeter element");
  if (index_of(pi) < 0) throw NotInNC("element is not in NC");
  return g_->multiply({factors_.bullet, pi, factors_.circle});
}

int NoncrossingLattice::kreweras(int i) const { return index_of(kreweras_element(elems_[i])); }

int NoncrossingLattice::join(int a, int b) const {
  Bitset both = parabolic_[a].member & parabolic_[b].member;
  auto it = by_parabolic_.find(both);
  if (it == by_parabolic_.end()) throw std::logic_error("W_a cap W_b is not a noncrossing parabolic");
  return it->second;
}

int NoncrossingLattice::meet(int a, int b) const {
  std::vector<int> lower;
  for (std::size_t z = 0; z < size(); ++z)
    if (leq(static_cast<int>(z), a) && leq(static_cast<int>(z), b)) lower.push_back(static_cast<int>(z));
  for (int l : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](int v) { return leq(v, l); })) return l;
  throw std::logic_error("no greatest lower bound");
}

std::optional<int> NoncrossingLattice::join_by_scan(int a, int b) const {
  std::vector<int> upper;
  for (std::size_t z = 0; z < size(); ++z)
    if (leq(a, static_cast<int>(z)) && leq(b, static_cast<int>(z))) upper.push_back(static_cast<int>(z));
  for (int u : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](int v) { return leq(u, v); })) return u;
  return std::nullopt;
}

bool NoncrossingLattice::is_prime(int i) const {
  auto word = g_->reduced_word(elems_[i]);
  std::set<int> support(word.begin(), word.end());
  return static_cast<int>(support.size()) == g_->rank();
}

std::vector<int> NoncrossingLattice::atoms() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (rank(static_cast<int>(i)) == 1) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> NoncrossingLattice::reflections() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (g_->reflection_length(elems_[i]) == 1) out.push_back(static_cast<int>(i));
  return out;
}

FinitePoset NoncrossingLattice::inversion_ideal(ElementId w, std::vector<int>* ids) const {
  if (w == g_->identity()) throw IdentityElement("inversion ideal of the identity");
  std::vector<int> gens;
  for (RootId r : g_->left_inversion_set(w)) gens.push_back(index_of(g_->reflection(r)));
  std::vector<int> keep;
  for (std::size_t x = 0; x < size(); ++x) {
    int xi = static_cast<int>(x);
    if (xi == bottom() || xi == top()) continue;
    if (std::any_of(gens.begin(), gens.end(), [&](int t) { return leq(xi, t); })) keep.push_back(xi);
  }
  if (ids) *ids = keep;
  return poset_.subposet(keep);
}

}  // namespace coxcat
