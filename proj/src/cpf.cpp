#include "coxcat/cpf.hpp"

#include <algorithm>
#include <stdexcept>

#include "coxcat/errors.hpp"

namespace coxcat {

CpfComplex::CpfComplex(std::shared_ptr<const ClusterComplex> delta, bool positive_only)
    : delta_(std::move(delta)), pf_(std::make_shared<const ParkingPoset>(delta_->nc_ptr())), positive_(positive_only) {
  const Group& g = group();
  const int n = g.rank();
  const ParkingPoset& pf = *pf_;
  const auto& dc = delta_->complex();
  std::vector<Face> faces;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(dc.dimension() + 1); ++k)
    for (const auto& f : dc.faces_of_size(k)) {
      if (positive_ && !f.empty() && f.front() < n) continue;
      const int pi = delta_->underline(f);
      std::vector<int> under;
      for (int v : f) under.push_back(delta_->underline({v}));
      for (ElementId u : [&] {
             // one representative per coset of W_pi
             std::vector<ElementId> reps;
             for (ElementId w = 0; w < static_cast<ElementId>(g.order()); ++w)
               if (pf.coset(pf.index_of(pi, w)).rep == w) reps.push_back(w);
             return reps;
           }()) {
        Face realized;
        for (std::size_t i = 0; i < f.size(); ++i) {
          std::pair<int, int> key{f[i], pf.index_of(under[i], u)};
          auto it = vertex_id_.find(key);
          if (it == vertex_id_.end()) {
            it = vertex_id_.emplace(key, static_cast<int>(vertex_key_.size())).first;
            vertex_key_.push_back(key);
          }
          realized.push_back(it->second);
        }
        std::sort(realized.begin(), realized.end());
        if (!data_.emplace(realized, CpfFace{f, pf.index_of(pi, u)}).second)
          throw std::logic_error("CPF realization is not injective");
        faces.push_back(std::move(realized));
      }
    }
  complex_ = AbstractComplex::from_faces(faces);
}

const CpfFace& CpfComplex::face_data(const Face& realized) const {
  auto it = data_.find(realized);
  if (it == data_.end()) throw std::invalid_argument("not a CPF face");
  return it->second;
}

int CpfComplex::act_vertex(ElementId w, int v) const {
  const auto& [cv, coset] = vertex_key_[v];
  auto it = vertex_id_.find({cv, pf_->act(w, coset)});
  if (it == vertex_id_.end()) throw std::logic_error("W-action leaves the CPF vertex set");
  return it->second;
}

bool CpfComplex::fixes(ElementId w, const Face& realized) const {
  const auto& d = face_data(realized);
  return pf_->act(w, d.coset) == d.coset;
}

AbstractComplex CpfComplex::fixed_subcomplex(ElementId g) const {
  std::vector<Face> fixed;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(complex_.dimension() + 1); ++k)
    for (const auto& f : complex_.faces_of_size(k))
      if (fixes(g, f)) fixed.push_back(f);
  try {
    return AbstractComplex::from_faces(fixed);
  } catch (const std::invalid_argument&) {
    throw NotAdmissible("fixed faces are not closed under taking subfaces");
  }
}

long long CpfComplex::signed_fixed_count(ElementId g) const {
  long long total = 0;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(complex_.dimension() + 1); ++k)
    for (const auto& f : complex_.faces_of_size(k))
      if (fixes(g, f)) total += k % 2 == 1 ? 1 : -1;
  return total;
}

long long predicted_lefschetz(const Group& g, int m, bool positive_only, ElementId w) {
  const int n = g.rank();
  const int l = g.reflection_length(w);
  long long base = static_cast<long long>(m) * g.roots().coxeter_number() + (positive_only ? -1 : 1);
  long long v = (n - 1 + l) % 2 == 0 ? 1 : -1;
  for (int i = 0; i < n - l; ++i) v *= base;
  return v;
}

LefschetzResult lefschetz(const CpfComplex& cpf, ElementId g) {
  LefschetzResult r;
  r.signed_count = cpf.signed_fixed_count(g);
  r.fixed_euler = homology(cpf.fixed_subcomplex(g)).euler();
  r.predicted = predicted_lefschetz(cpf.group(), cpf.delta().m(), cpf.positive_only(), g);
  return r;
}

std::vector<long long> orbit_face_counts(const ClusterComplex& d, bool positive_only) {
  const int n = d.group().rank();
  std::vector<long long> out;
  const auto& dc = d.complex();
  for (std::size_t k = 0; k <= static_cast<std::size_t>(dc.dimension() + 1); ++k) {
    long long total = 0;
    for (const auto& f : dc.faces_of_size(k)) {
      if (positive_only && !f.empty() && f.front() < n) continue;
      total += static_cast<long long>(d.group().order() / d.nc().parabolic(d.underline(f)).order());
    }
    out.push_back(total);
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::shared_ptr<const CpfComplex> build_cpf(const CoxeterDatum& datum, int m, bool positive_only) {
  auto g = Group::build(datum);
  auto nc = std::make_shared<const NoncrossingLattice>(g);
  auto d = std::make_shared<const ClusterComplex>(nc, m);
  return std::make_shared<const CpfComplex>(d, positive_only);
}

FvectorCheck cpf_link_check(const CpfComplex& cpf, const Face& realized) {
  if (cpf.positive_only()) throw NotAdmissible("link check applies to the full complex");
  FvectorCheck out;
  out.actual = cpf.complex().link(realized).f_vector();
  const auto& data = cpf.face_data(realized);
  const auto& d = cpf.delta();
  auto sub = parabolic_group(d.group(), d.nc().parabolic(d.underline(data.cluster)), &out.detail);
  auto nc = std::make_shared<const NoncrossingLattice>(sub);
  CpfComplex other(std::make_shared<const ClusterComplex>(nc, d.m()), cpf.positive_only());
  out.expected = other.complex().f_vector();
  return out;
}

namespace {

std::vector<long long> join_fvector(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

FvectorCheck cpf_join_check(const CoxeterDatum& a, const CoxeterDatum& b, int m) {
  FvectorCheck out;
  CoxeterDatum prod = product(a, b);
  out.detail = prod.type_label;
  out.actual = build_cpf(prod, m, false)->complex().f_vector();
  out.expected = join_fvector(build_cpf(a, m, false)->complex().f_vector(), build_cpf(b, m, false)->complex().f_vector());
  return out;
}

std::vector<long long> coxeter_complex_fvector(const Group& g) {
  const int n = g.rank();
  std::vector<long long> f(n + 1, 0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    // faces of size n - |I| are cosets of W_I
    f[n - idx.size()] += static_cast<long long>(g.order() / standard_parabolic(g, idx).order());
  }
  return f;
}

FlagReport flag_report(const AbstractComplex& c) {
  FlagReport rep;
  const auto verts = c.vertices();
  std::map<int, std::vector<int>> nbr;
  if (c.dimension() >= 1)
    for (const auto& e : c.faces_of_size(2)) {
      nbr[e[0]].push_back(e[1]);
      nbr[e[1]].push_back(e[0]);
    }
  for (auto& [v, list] : nbr) std::sort(list.begin(), list.end());
  // Extend faces by common neighbours; any clique that is not a face is a witness.
  for (std::size_t k = 2; k <= static_cast<std::size_t>(c.dimension() + 1); ++k)
    for (const auto& f : c.faces_of_size(k)) {
      for (int v : nbr[f.back()]) {
        if (v <= f.back()) continue;
        bool all = std::all_of(f.begin(), f.end(), [&](int u) {
          return std::binary_search(nbr[u].begin(), nbr[u].end(), v);
        });
        if (!all) continue;
        ++rep.cliques_checked;
        Face g = f;
        g.push_back(v);
        if (!c.contains(g)) {
          rep.flag = false;
          if (rep.missing.empty()) rep.missing = g;
        }
      }
    }
  return rep;
}

CmReport cpf_cm_check(const CpfComplex& cpf) {
  const auto& c = cpf.complex();
  std::vector<Face> faces;
  for (std::size_t k = 1; k <= static_cast<std::size_t>(c.dimension() + 1); ++k)
    for (const auto& f : c.faces_of_size(k)) faces.push_back(f);
  FinitePoset p(faces.size(), [&](int a, int b) {
    return std::includes(faces[b].begin(), faces[b].end(), faces[a].begin(), faces[a].end());
  });
  return homology_cm_check(p);
}

std::pair<std::vector<long long>, std::vector<long long>> whitney_check(const CpfComplex& plus) {
  if (plus.delta().m() != 1 || !plus.positive_only()) throw FussParameterUnsupported("Whitney comparison needs CPF^+ with m = 1");
  const int n = plus.group().rank();
  std::vector<long long> f(n + 1, 0);
  for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k)
    if (k <= static_cast<std::size_t>(plus.complex().dimension() + 1)) f[k] = static_cast<long long>(plus.complex().count_of_size(k));
  auto w = whitney_numbers(plus.pf());
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i % 2 == 1) w[i] = -w[i];
  return {f, w};
}

}  // namespace coxcat
