#include "coxcat/cluster.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "coxcat/errors.hpp"

namespace coxcat {

ClusterComplex::ClusterComplex(std::shared_ptr<const NoncrossingLattice> nc, int m) : nc_(std::move(nc)), m_(m) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  const Group& g = group();
  const RootSystem& rs = g.roots();
  const int n = g.rank();
  const int np = static_cast<int>(rs.num_positive());
  for (int i = 0; i < n; ++i) vertices_.push_back({rs.negate(rs.simple(i)), 1});
  for (int col = 1; col <= m; ++col)
    for (RootId p = 0; p < np; ++p) vertices_.push_back({p, col});
  const int nv = static_cast<int>(vertices_.size());

  if (m == 0) {
    Face all(n);
    std::iota(all.begin(), all.end(), 0);
    complex_ = AbstractComplex::from_facets({all});
    compat_.assign(nv, std::vector<char>(nv, 1));
    for (int v = 0; v < nv; ++v) compat_[v][v] = 0;
  } else {
    const auto& color = g.datum().color;
    const ElementId c = nc_->coxeter();
    auto in_circle = [&](RootId r) {
      int i = rs.simple_index(r);
      return i >= 0 && color[i] == 1;
    };
    rotation_.resize(nv);
    for (int v = 0; v < nv; ++v) {
      auto [a, i] = vertices_[v];
      ColoredRoot out;
      if (rs.is_positive(a) && i < m) {
        out = {a, i + 1};
      } else if (!rs.is_positive(a)) {
        RootId b = rs.negate(a);
        if (color[rs.simple_index(b)] == 0) out = {b, 1};
        else out = {g.act(c, a), 1};
      } else if (in_circle(a)) {
        out = {rs.negate(a), 1};
      } else {
        out = {g.act(c, a), 1};
      }
      rotation_[v] = vertex_id(out);
      if (rotation_[v] < 0) throw std::logic_error("rotation left the colored almost positive roots");
    }
    std::vector<char> hit(nv, 0);
    for (int r : rotation_) hit[r] = 1;
    if (std::count(hit.begin(), hit.end(), 0)) throw std::logic_error("rotation is not a bijection");
    long long order = 1;
    for (int v = 0; v < nv; ++v) {
      long long k = 1;
      for (int x = rotation_[v]; x != v; x = rotation_[x]) ++k;
      order = std::lcm(order, k);
    }
    rotation_order_ = static_cast<int>(order);

    auto base = [&](int neg, int other) {
      int k = rs.simple_index(rs.negate(vertices_[neg].root));
      return rs.coord(vertices_[other].root, k).is_zero();
    };
    compat_.assign(nv, std::vector<char>(nv, 0));
    for (int u = 0; u < nv; ++u)
      for (int v = u + 1; v < nv; ++v) {
        int a = u, b = v, steps = 0;
        while (a >= n && b >= n) {
          if (++steps > rotation_order_) throw RotationBudgetExceeded("no negated simple root in the rotation orbit");
          a = rotation_[a];
          b = rotation_[b];
        }
        bool ok = a < n ? base(a, b) : base(b, a);
        compat_[u][v] = compat_[v][u] = ok;
      }

    // Flag complex by clique extension in vertex order.
    std::vector<Face> faces{{}};
    for (std::size_t k = 0; k < faces.size(); ++k) {
      const Face f = faces[k];
      int start = f.empty() ? 0 : f.back() + 1;
      for (int v = start; v < nv; ++v)
        if (std::all_of(f.begin(), f.end(), [&](int u) { return compat_[u][v]; })) {
          Face h = f;
          h.push_back(v);
          faces.push_back(std::move(h));
        }
    }
    complex_ = AbstractComplex::from_faces(faces);
  }
  for (std::size_t k = 0; k <= static_cast<std::size_t>(complex_.dimension() + 1); ++k)
    for (const auto& f : complex_.faces_of_size(k)) product_.emplace(f, compute_product(f));
}

int ClusterComplex::vertex_id(ColoredRoot cr) const {
  const RootSystem& rs = group().roots();
  const int n = group().rank();
  if (!rs.is_positive(cr.root)) {
    int k = rs.simple_index(rs.negate(cr.root));
    return k >= 0 && cr.color == 1 ? k : -1;
  }
  if (cr.color < 1 || cr.color > m_) return -1;
  return n + (cr.color - 1) * static_cast<int>(rs.num_positive()) + cr.root;
}

RootId ClusterComplex::reflection_root(int v) const {
  RootId r = vertices_[v].root;
  return group().roots().is_positive(r) ? r : group().roots().negate(r);
}

AbstractComplex ClusterComplex::positive() const {
  const int n = group().rank();
  return complex_.filter([&](const Face& f) { return f.empty() || f.front() >= n; });
}

int ClusterComplex::compute_product(const Face& f) const {
  const Group& g = group();
  const int k = static_cast<int>(f.size());
  std::vector<ElementId> refl;
  for (int v : f) refl.push_back(g.reflection(reflection_root(v)));
  std::set<ElementId> found;
  std::vector<char> used(k, 0);
  // Prefixes of a reduced factorization of an NC element are in NC.
  auto dfs = [&](auto&& self, ElementId prefix, int depth) -> void {
    if (depth == k) {
      found.insert(prefix);
      return;
    }
    for (int i = 0; i < k; ++i) {
      if (used[i]) continue;
      ElementId next = g.multiply(prefix, refl[i]);
      if (g.reflection_length(next) != depth + 1 || nc_->index_of(next) < 0) continue;
      used[i] = 1;
      self(self, next, depth + 1);
      used[i] = 0;
    }
  };
  dfs(dfs, g.identity(), 0);
  if (found.empty()) throw ProductNotFound("no ordering of the face lies in NC");
  if (found.size() > 1) throw ProductNotUnique("orderings of the face give distinct NC elements");
  return nc_->index_of(*found.begin());
}

int ClusterComplex::product(const Face& f) const {
  auto it = product_.find(f);
  if (it == product_.end()) throw std::invalid_argument("not a face of the cluster complex");
  return it->second;
}

int ClusterComplex::underline(const Face& f) const { return nc_->kreweras(product(f)); }

AbstractComplex ClusterComplex::restricted(int pi, bool positive_only) const {
  const int n = group().rank();
  return complex_.filter([&](const Face& f) {
    if (positive_only && !f.empty() && f.front() < n) return false;
    return nc_->leq(underline(f), pi);
  });
}

long long ClusterComplex::k_w(ElementId w) const {
  const Group& g = group();
  const int n = g.rank();
  long long count = 0;
  if (static_cast<int>(complex_.dimension()) + 1 < n) return 0;
  for (const auto& f : complex_.faces_of_size(n)) {
    if (f.front() < n) continue;
    if (std::all_of(f.begin(), f.end(), [&](int v) { return g.left_inverts(w, reflection_root(v)); })) ++count;
  }
  return count;
}

CoxeterClusters c_cluster_complex(const Group& g, const std::vector<int>& word) {
  if (!is_standard_coxeter(g, g.from_word(word)) || static_cast<int>(word.size()) != g.rank())
    throw NotCoxeterElement("word is not a standard Coxeter element");
  const RootSystem& rs = g.roots();
  const int n = g.rank();
  const int nv = n + static_cast<int>(rs.num_positive());
  CoxeterClusters out;
  for (int v = 0; v < nv; ++v) out.vertex_root.push_back(v < n ? rs.negate(rs.simple(v)) : v - n);
  auto vertex_of = [&](RootId r) { return rs.is_positive(r) ? n + r : rs.simple_index(rs.negate(r)); };
  auto sigma = [&](int i, int v) {
    RootId r = out.vertex_root[v];
    if (!rs.is_positive(r) && rs.simple_index(rs.negate(r)) != i) return v;
    return vertex_of(rs.reflect_simple(i, r));
  };
  std::vector<int> tau(nv);
  for (int v = 0; v < nv; ++v) {
    int x = v;
    for (int k = n - 1; k >= 0; --k) x = sigma(word[k], x);
    tau[v] = x;
  }
  std::vector<std::vector<char>> compat(nv, std::vector<char>(nv, 0));
  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v) {
      int a = u, b = v, steps = 0;
      while (a >= n && b >= n) {
        if (++steps > 2 * nv) throw RotationBudgetExceeded("no negated simple root in the tau_c orbit");
        a = tau[a];
        b = tau[b];
      }
      int neg = a < n ? a : b, other = a < n ? b : a;
      compat[u][v] = compat[v][u] = rs.coord(out.vertex_root[other], neg).is_zero();
    }
  std::vector<Face> faces{{}};
  for (std::size_t k = 0; k < faces.size(); ++k) {
    const Face f = faces[k];
    for (int v = f.empty() ? 0 : f.back() + 1; v < nv; ++v)
      if (std::all_of(f.begin(), f.end(), [&](int u) { return compat[u][v]; })) {
        Face h = f;
        h.push_back(v);
        faces.push_back(std::move(h));
      }
  }
  out.complex = AbstractComplex::from_faces(faces);
  return out;
}

std::shared_ptr<const Group> parabolic_group(const Group& g, const ParabolicSubgroup& p, std::string* type) {
  auto sys = subgroup_system(g, p);
  if (type) *type = sys.datum.type_label;
  return Group::build(sys.datum);
}

LinkCheck link_fvector_check(const ClusterComplex& d, const Face& f) {
  LinkCheck out;
  out.link_f = d.complex().link(f).f_vector();
  const auto& p = d.nc().parabolic(d.underline(f));
  auto sub = parabolic_group(d.group(), p, &out.parabolic_type);
  auto nc = std::make_shared<const NoncrossingLattice>(sub);
  out.expected_f = ClusterComplex(nc, d.m()).complex().f_vector();
  return out;
}

long long fixed_cosets(const Group& g, const ParabolicSubgroup& p, ElementId w) {
  long long hits = 0;
  for (ElementId u = 0; u < static_cast<ElementId>(g.order()); ++u)
    if (p.contains(g.multiply({g.inverse(u), w, u}))) ++hits;
  return hits / static_cast<long long>(p.order());
}

long long alternating_character_sum(const ClusterComplex& d, bool positive_only, ElementId w) {
  const int n = d.group().rank();
  std::unordered_map<int, long long> per_pi;
  long long total = 0;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(d.complex().dimension() + 1); ++k)
    for (const auto& f : d.complex().faces_of_size(k)) {
      if (positive_only && !f.empty() && f.front() < n) continue;
      int pi = d.underline(f);
      auto it = per_pi.find(pi);
      if (it == per_pi.end()) it = per_pi.emplace(pi, fixed_cosets(d.group(), d.nc().parabolic(pi), w)).first;
      total += (k % 2 == 1 ? 1 : -1) * it->second;
    }
  return total;
}

}  // namespace coxcat
