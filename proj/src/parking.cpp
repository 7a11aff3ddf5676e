#include "coxcat/parking.hpp"

#include <algorithm>
#include <map>

#include "coxcat/errors.hpp"

namespace coxcat {

ParkingPoset::ParkingPoset(std::shared_ptr<const NoncrossingLattice> nc) : nc_(std::move(nc)) {
  const Group& g = group();
  const std::size_t order = g.order();
  coset_of_.assign(nc_->size() * order, -1);
  for (std::size_t pi = 0; pi < nc_->size(); ++pi) {
    const auto& sub = nc_->parabolic(static_cast<int>(pi));
    int* slot = &coset_of_[pi * order];
    for (ElementId u = 0; u < static_cast<ElementId>(order); ++u) {
      if (slot[u] >= 0) continue;
      ElementId best = u;
      Bitset mem(order);
      for (ElementId p : sub.elements) {
        ElementId x = g.multiply(u, p);
        mem.set(x);
        if (g.coxeter_length(x) < g.coxeter_length(best)) best = x;
      }
      const int id = static_cast<int>(cosets_.size());
      cosets_.push_back({static_cast<int>(pi), best});
      members_.push_back(std::move(mem));
      for (auto x = members_.back().find_first(); x != Bitset::npos; x = members_.back().find_next(x)) slot[x] = id;
    }
  }
}

bool ParkingPoset::leq_algebraic(int x, int y) const {
  const auto& a = cosets_[x];
  const auto& b = cosets_[y];
  if (!nc_->leq(a.pi, b.pi)) return false;
  return nc_->parabolic(a.pi).contains(group().multiply(group().inverse(a.rep), b.rep));
}

const FinitePoset& ParkingPoset::poset() const {
  std::call_once(poset_once_, [&] { poset_ = FinitePoset(size(), [&](int a, int b) { return leq_algebraic(a, b); }); });
  return *poset_;
}

std::vector<int> ParkingPoset::action(ElementId w) const {
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = act(w, static_cast<int>(i));
  return out;
}

std::optional<int> ParkingPoset::intersection(int x, int y) const {
  Bitset both = members_[x] & members_[y];
  auto first = both.find_first();
  if (first == Bitset::npos) return std::nullopt;
  const std::size_t cnt = both.count();
  for (std::size_t pi = 0; pi < nc_->size(); ++pi) {
    if (nc_->parabolic(static_cast<int>(pi)).order() != cnt) continue;
    int id = index_of(static_cast<int>(pi), static_cast<ElementId>(first));
    if (members_[id] == both) return id;
  }
  throw std::logic_error("coset intersection is not a parking coset");
}

CheckReport pf_interval_iso_check(const ParkingPoset& pf, ElementId w) {
  CheckReport rep;
  const auto& nc = pf.nc();
  std::vector<int> ids;
  for (int pi = 0; pi < static_cast<int>(nc.size()); ++pi) ids.push_back(pf.index_of(pi, w));
  // Everything between W and {w} contains w, so it is one of ids.
  int inside = 0;
  for (std::size_t x = 0; x < pf.size(); ++x)
    if (pf.members(static_cast<int>(x)).test(w)) ++inside;
  if (inside != static_cast<int>(nc.size())) rep.fail("interval size differs from |NC|");
  for (int a = 0; a < static_cast<int>(nc.size()); ++a)
    for (int b = 0; b < static_cast<int>(nc.size()); ++b)
      if (pf.leq_algebraic(ids[a], ids[b]) != nc.leq(a, b))
        rep.fail("order mismatch at w=" + std::to_string(w) + " between NC ids " + std::to_string(a) + "," +
                 std::to_string(b));
  return rep;
}

namespace {

std::vector<long long> rank_counts(const FinitePoset& p) {
  std::vector<long long> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::size_t r = static_cast<std::size_t>(p.rank(static_cast<int>(x)));
    if (out.size() <= r) out.resize(r + 1, 0);
    ++out[r];
  }
  return out;
}

}  // namespace

CheckReport pf_filter_iso_check(const ParkingPoset& pf, int x) {
  CheckReport rep;
  std::vector<int> filter;
  for (std::size_t y = 0; y < pf.size(); ++y)
    if (pf.leq_algebraic(x, static_cast<int>(y))) filter.push_back(static_cast<int>(y));
  FinitePoset up = pf.poset().subposet(filter);
  auto sub = parabolic_group(pf.group(), pf.nc().parabolic(pf.coset(x).pi));
  ParkingPoset other(std::make_shared<const NoncrossingLattice>(sub));
  const FinitePoset& target = other.poset();
  if (up.size() != target.size()) rep.fail("filter size " + std::to_string(up.size()) + " vs " + std::to_string(target.size()));
  if (rank_counts(up) != rank_counts(target)) rep.fail("rank counts differ");
  if (order_complex(up).f_vector() != order_complex(target).f_vector()) rep.fail("order complex f-vectors differ");
  return rep;
}

BigInt park_char(const Group& g, int m, ElementId w, bool prime) {
  if (!g.datum().irreducible()) throw ReducibleGroup("parking character formula needs an irreducible group");
  const int n = g.rank();
  long base = static_cast<long>(m) * g.roots().coxeter_number() + (prime ? -1 : 1);
  BigInt out = 1;
  for (int i = 0; i < n - g.reflection_length(w); ++i) out *= base;
  return out;
}

HomologyProfile pf_top_homology(const ParkingPoset& pf) { return homology(order_complex(pf.poset().proper_part())); }

long long pf_fixed_euler(const ParkingPoset& pf, ElementId g) {
  std::vector<int> ids;
  FinitePoset bar = pf.poset().proper_part(&ids);
  std::vector<int> fixed;
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (pf.act(g, ids[i]) == ids[i]) fixed.push_back(static_cast<int>(i));
  return reduced_euler(order_complex(bar.subposet(fixed)));
}

std::vector<LabeledCluster> labeled_clusters(const ClusterComplex& d, bool positive_only) {
  if (d.m() != 1) throw FussParameterUnsupported("labeled clusters are defined for m = 1 only");
  const Group& g = d.group();
  const int n = g.rank();
  std::vector<LabeledCluster> out;
  if (d.complex().dimension() + 1 < n) return out;
  for (const auto& f : d.complex().faces_of_size(n)) {
    if (positive_only && f.front() < n) continue;
    for (ElementId w = 0; w < static_cast<ElementId>(g.order()); ++w) {
      bool ok = true;
      for (int v : f)
        if (d.is_positive_vertex(v) && g.left_inverts(w, d.vertex(v).root)) ok = false;
      if (ok) out.push_back({f, w});
    }
  }
  return out;
}

long long lw(const AbstractComplex& clusters, const std::vector<RootId>& vertex_root, const Group& g, ElementId w) {
  const int n = g.rank();
  long long count = 0;
  if (clusters.dimension() + 1 < n) return 0;
  for (const auto& f : clusters.faces_of_size(n)) {
    bool ok = true;
    for (int v : f) {
      RootId r = vertex_root[v];
      if (g.roots().is_positive(r) && g.left_inverts(w, r)) ok = false;
    }
    count += ok;
  }
  return count;
}

long long mw(const NoncrossingLattice& nc, ElementId w) {
  const Group& g = nc.group();
  long long count = 0;
  for (int pi = 0; pi < static_cast<int>(nc.size()); ++pi) {
    bool ok = true;
    for (ElementId t : g.reflections())
      if (nc.parabolic(pi).contains(t) && g.inverts(w, g.reflection_root(t))) ok = false;
    count += ok;
  }
  return count;
}

std::pair<long long, long long> lw_mw(const ClusterComplex& d, const NoncrossingLattice& nc, ElementId w) {
  std::vector<RootId> roots;
  for (std::size_t v = 0; v < d.num_vertices(); ++v) roots.push_back(d.vertex(static_cast<int>(v)).root);
  return {lw(d.complex(), roots, d.group(), w), mw(nc, w)};
}

namespace {

// Positive roots that are nonnegative combinations of the given independent roots.
std::vector<RootId> cone_roots(const RootSystem& rs, const std::vector<RootId>& gens) {
  const int n = rs.rank();
  const int k = static_cast<int>(gens.size());
  std::vector<RootId> out;
  for (RootId b = 0; b < static_cast<RootId>(rs.num_positive()); ++b) {
    ScalarMatrix m(n, ScalarVector(k + 1));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < k; ++j) m[i][j] = rs.coord(gens[j], i);
      m[i][k] = rs.coord(b, i);
    }
    auto piv = rref(m, k + 1);
    if (!piv.empty() && piv.back() == k) continue;
    bool nonneg = true;
    for (std::size_t r = 0; r < piv.size(); ++r)
      if (m[r][k].sign() < 0) nonneg = false;
    if (nonneg) out.push_back(b);
  }
  return out;
}

}  // namespace

LabeledClusterReport labeled_cluster_bijection_check(const ClusterComplex& d, const ParkingPoset& pf) {
  LabeledClusterReport rep;
  const Group& g = d.group();
  auto lc = labeled_clusters(d, false);
  rep.lc = lc.size();
  rep.pf = pf.size();
  std::map<Face, std::vector<RootId>> cones;
  for (const auto& [f, w] : lc) {
    Face pos;
    std::vector<RootId> gens;
    for (int v : f)
      if (d.is_positive_vertex(v)) {
        pos.push_back(v);
        gens.push_back(d.vertex(v).root);
      }
    auto it = cones.find(pos);
    if (it == cones.end()) it = cones.emplace(pos, cone_roots(g.roots(), gens)).first;
    if (std::any_of(it->second.begin(), it->second.end(), [&](RootId r) { return g.left_inverts(w, r); }))
      ++rep.violations;
    const auto& sub = d.nc().parabolic(d.product(pos));
    for (ElementId t : g.reflections())
      if (sub.contains(t) && g.left_inverts(w, g.reflection_root(t))) {
        ++rep.parabolic_meets;
        break;
      }
  }
  return rep;
}

HellyReport helly_report(const ParkingPoset& pf, const std::vector<int>& rank_filter, std::size_t max_family) {
  HellyReport rep;
  const int n = pf.group().rank();
  std::vector<int> pool;
  for (std::size_t x = 0; x < pf.size(); ++x) {
    int r = pf.rank(static_cast<int>(x));
    bool keep = rank_filter.empty() ? (r >= 1 && r <= n - 1)
                                    : std::find(rank_filter.begin(), rank_filter.end(), r) != rank_filter.end();
    if (keep) pool.push_back(static_cast<int>(x));
  }
  const std::size_t k = pool.size();
  std::vector<Bitset> adj(k, Bitset(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (pf.members(pool[a]).intersects(pf.members(pool[b]))) {
        adj[a].set(b);
        adj[b].set(a);
      }
  std::vector<int> family;
  auto dfs = [&](auto&& self, const Bitset& candidates, const Bitset& common) -> bool {
    for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
      family.push_back(static_cast<int>(v));
      Bitset meet = common & pf.members(pool[v]);
      ++rep.families_checked;
      rep.max_family = std::max(rep.max_family, family.size());
      if (meet.none()) {
        for (int i : family) rep.counterexample.push_back(pool[i]);
        rep.holds = false;
        return true;
      }
      Bitset next = candidates & adj[v];
      for (auto u = next.find_first(); u != Bitset::npos && u <= v; u = next.find_next(u)) next.reset(u);
      if (next.any()) {
        if (family.size() >= max_family) rep.exhaustive = false;
        else if (self(self, next, meet)) return true;
      }
      family.pop_back();
    }
    return false;
  };
  Bitset all(k);
  all.set();
  Bitset everything(pf.group().order());
  everything.set();
  dfs(dfs, all, everything);
  return rep;
}

std::vector<long long> whitney_numbers(const ParkingPoset& pf) {
  const int n = pf.group().rank();
  std::vector<long long> w(n + 1, 0);
  auto mu = pf.poset().mobius_from(pf.minimum());
  for (std::size_t x = 0; x < pf.size(); ++x) w[pf.rank(static_cast<int>(x))] += mu[x];
  return w;
}

}  // namespace coxcat
