#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "coxcat/cluster.hpp"
#include "coxcat/complex.hpp"
#include "coxcat/noncrossing.hpp"

namespace coxcat {

// The coset w W_pi, stored by its minimal length representative.
struct ParkingCoset {
  int pi;
  ElementId rep;
  bool operator==(const ParkingCoset& o) const { return pi == o.pi && rep == o.rep; }
};

// PF = {w W_pi}, ordered by reverse inclusion. The minimum is W.
class ParkingPoset {
 public:
  explicit ParkingPoset(std::shared_ptr<const NoncrossingLattice> nc);

  const NoncrossingLattice& nc() const { return *nc_; }
  const Group& group() const { return nc_->group(); }
  std::size_t size() const { return cosets_.size(); }
  const ParkingCoset& coset(int i) const { return cosets_[i]; }
  // Id of w W_pi for any w in the coset.
  int index_of(int pi, ElementId w) const { return coset_of_[static_cast<std::size_t>(pi) * group().order() + w]; }
  int rank(int i) const { return nc_->rank(cosets_[i].pi); }
  const Bitset& members(int i) const { return members_[i]; }

  // x <= y iff pi <= pi' in NC and w^-1 w' in W_pi.
  bool leq_algebraic(int x, int y) const;
  const FinitePoset& poset() const;
  int minimum() const { return index_of(nc_->bottom(), group().identity()); }
  int singleton(ElementId w) const { return index_of(nc_->top(), w); }

  int act(ElementId w, int i) const { return index_of(cosets_[i].pi, group().multiply(w, cosets_[i].rep)); }
  std::vector<int> action(ElementId w) const;
  // Coset intersection as a PF element, nullopt when empty.
  std::optional<int> intersection(int x, int y) const;

 private:
  std::shared_ptr<const NoncrossingLattice> nc_;
  std::vector<ParkingCoset> cosets_;
  std::vector<int> coset_of_;
  std::vector<Bitset> members_;
  mutable std::once_flag poset_once_;
  mutable std::optional<FinitePoset> poset_;
};

struct CheckReport {
  bool passed = true;
  std::vector<std::string> failures;
  void fail(std::string why) {
    passed = false;
    if (failures.size() < 20) failures.push_back(std::move(why));
  }
};

// [W, {w}] maps isomorphically onto NC via w W_pi -> pi.
CheckReport pf_interval_iso_check(const ParkingPoset& pf, ElementId w);
// The principal filter above x against PF of the parabolic's own datum:
// sizes, rank counts and order complex f-vectors.
CheckReport pf_filter_iso_check(const ParkingPoset& pf, int x);

// Park_m(w) = (mh+1)^{n-l(w)}, Park'_m(w) = (mh-1)^{n-l(w)} with l the reflection length.
BigInt park_char(const Group& g, int m, ElementId w, bool prime);

HomologyProfile pf_top_homology(const ParkingPoset& pf);

// Reduced Euler characteristic of the order complex of the g-fixed proper part.
long long pf_fixed_euler(const ParkingPoset& pf, ElementId g);

// (facet, w) with no positive root of the facet a left inversion of w; Delta^(1) only.
struct LabeledCluster {
  Face facet;
  ElementId w;
};
std::vector<LabeledCluster> labeled_clusters(const ClusterComplex& d, bool positive_only);

// l_w counts facets avoiding the left inversions of w; m_w counts pi in NC with
// w a minimal representative of w W_pi (no right inversion of w in W_pi).
std::pair<long long, long long> lw_mw(const ClusterComplex& d, const NoncrossingLattice& nc, ElementId w);
long long lw(const AbstractComplex& clusters, const std::vector<RootId>& vertex_root, const Group& g, ElementId w);
long long mw(const NoncrossingLattice& nc, ElementId w);

// For every (f, w) in LC no positive root in the cone spanned by the positive
// roots of f is a left inversion of w; and #LC = #PF. Also counts the pairs
// where some reflection of W_{prod f+} is a left inversion of w (informational).
struct LabeledClusterReport {
  std::size_t lc = 0, pf = 0;
  std::size_t violations = 0;
  std::size_t parabolic_meets = 0;
  bool passed() const { return lc == pf && violations == 0; }
};
LabeledClusterReport labeled_cluster_bijection_check(const ClusterComplex& d, const ParkingPoset& pf);

struct HellyReport {
  bool holds = true;
  std::size_t families_checked = 0;
  std::size_t max_family = 0;
  std::vector<int> counterexample;  // PF ids
  bool exhaustive = true;           // false if the size bound cut the search
};
// Pairwise intersecting families among PF elements of the given ranks (all
// ranks 1..n-1 when rank_filter is empty), up to max_family members.
HellyReport helly_report(const ParkingPoset& pf, const std::vector<int>& rank_filter = {1}, std::size_t max_family = 6);

// Whitney numbers of the first kind w_0..w_n.
std::vector<long long> whitney_numbers(const ParkingPoset& pf);

}  // namespace coxcat
