#include "coxcat/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

#include "coxcat/errors.hpp"

namespace coxcat {

Flat Flat::span(ScalarMatrix rows, int ambient, const FieldPtr& field) {
  Flat f;
  f.ambient = ambient;
  f.pivots = rref(rows, ambient);
  for (auto& row : rows)
    for (auto& x : row) x = x.promoted(field);
  f.basis = std::move(rows);
  return f;
}

Flat Flat::whole(int ambient, const FieldPtr& field) {
  ScalarMatrix id(ambient, ScalarVector(ambient, ExactScalar(field, Rational(0))));
  for (int i = 0; i < ambient; ++i) id[i][i] = ExactScalar(field, Rational(1));
  return span(std::move(id), ambient, field);
}

bool Flat::contains(const ScalarVector& v) const {
  ScalarVector w = v;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    ExactScalar f = w[pivots[k]];
    if (f.is_zero()) continue;
    for (int j = 0; j < ambient; ++j) w[j] -= f * basis[k][j];
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Flat::subset_of(const Flat& other) const {
  if (dim() > other.dim()) return false;
  for (const auto& row : basis)
    if (!other.contains(row)) return false;
  return true;
}

bool Flat::operator==(const Flat& o) const { return ambient == o.ambient && basis == o.basis; }

bool Flat::operator<(const Flat& o) const {
  if (ambient != o.ambient) return ambient < o.ambient;
  if (dim() != o.dim()) return dim() > o.dim();
  ScalarVectorLess less;
  for (int k = 0; k < dim(); ++k) {
    if (less(basis[k], o.basis[k])) return true;
    if (less(o.basis[k], basis[k])) return false;
  }
  return false;
}

std::string Group::key(const std::uint16_t* p) const {
  return std::string(reinterpret_cast<const char*>(p), nroots_ * sizeof(std::uint16_t));
}

Group::Group(std::shared_ptr<const RootSystem> roots) : roots_(std::move(roots)) {
  const RootSystem& rs = *roots_;
  nroots_ = rs.size();
  if (nroots_ > 65535) throw std::length_error("too many roots for 16-bit permutations");
  const int n = rs.rank();

  std::vector<std::uint16_t> id(nroots_);
  for (std::size_t r = 0; r < nroots_; ++r) id[r] = static_cast<std::uint16_t>(r);
  perm_ = id;
  lookup_.emplace(key(id.data()), 0);

  // Breadth-first closure under left multiplication by simple reflections.
  std::vector<std::uint16_t> next(nroots_);
  for (std::size_t w = 0; nroots_ > 0 && w * nroots_ < perm_.size(); ++w) {
    for (int i = 0; i < n; ++i) {
      for (std::size_t r = 0; r < nroots_; ++r)
        next[r] = static_cast<std::uint16_t>(rs.reflect_simple(i, perm_[w * nroots_ + r]));
      auto k = key(next.data());
      if (lookup_.count(k)) continue;
      lookup_.emplace(std::move(k), static_cast<ElementId>(perm_.size() / nroots_));
      perm_.insert(perm_.end(), next.begin(), next.end());
    }
  }
  const std::size_t ord = nroots_ == 0 ? 1 : perm_.size() / nroots_;

  const RootId npos = static_cast<RootId>(rs.num_positive());
  length_.assign(ord, 0);
  for (std::size_t w = 0; w < ord; ++w)
    for (RootId r = 0; r < npos; ++r)
      if (perm_[w * nroots_ + r] >= npos) ++length_[w];
  longest_ = static_cast<ElementId>(std::max_element(length_.begin(), length_.end()) - length_.begin());

  gens_.resize(n);
  for (int i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < nroots_; ++r) next[r] = static_cast<std::uint16_t>(rs.reflect_simple(i, r));
    gens_[i] = lookup_.at(key(next.data()));
  }

  inverse_.assign(ord, 0);
  for (std::size_t w = 0; w < ord && nroots_ > 0; ++w) {
    for (std::size_t r = 0; r < nroots_; ++r) next[perm_[w * nroots_ + r]] = static_cast<std::uint16_t>(r);
    inverse_[w] = lookup_.at(key(next.data()));
  }

  if (ord <= 2048) {
    table_.resize(ord * ord);
    for (std::size_t a = 0; a < ord; ++a)
      for (std::size_t b = 0; b < ord; ++b)
        table_[a * ord + b] = compose_lookup(static_cast<ElementId>(a), static_cast<ElementId>(b));
  }

  // t_r = s_i t_g s_i whenever r = s_i(g).
  reflections_.assign(npos, -1);
  std::function<ElementId(RootId)> refl = [&](RootId r) -> ElementId {
    if (reflections_[r] >= 0) return reflections_[r];
    auto [i, g] = rs.descent()[r];
    ElementId t = i < 0 ? gens_[rs.simple_index(r)] : multiply({gens_[i], refl(g), gens_[i]});
    reflections_[r] = t;
    return t;
  };
  refl_root_.assign(ord, -1);
  for (RootId r = 0; r < npos; ++r) refl_root_[refl(r)] = r;

  refl_length_.assign(ord, -1);
  refl_length_[0] = 0;
  std::deque<ElementId> queue{0};
  while (!queue.empty()) {
    ElementId w = queue.front();
    queue.pop_front();
    for (ElementId t : reflections_) {
      ElementId u = multiply(t, w);
      if (refl_length_[u] >= 0) continue;
      refl_length_[u] = refl_length_[w] + 1;
      queue.push_back(u);
    }
  }

  fixed_.reserve(ord);
  for (std::size_t w = 0; w < ord; ++w) {
    ScalarMatrix m = matrix(static_cast<ElementId>(w));
    for (int i = 0; i < n; ++i) m[i][i] -= ExactScalar(rs.field(), Rational(1));
    fixed_.push_back(Flat::span(kernel_basis(m, n), n, rs.field()));
  }
}

std::shared_ptr<const Group> Group::build(const CoxeterDatum& datum, Arithmetic mode) {
  return std::make_shared<const Group>(std::make_shared<const RootSystem>(RootSystem::enumerate(datum, mode)));
}

ElementId Group::compose_lookup(ElementId a, ElementId b) const {
  if (nroots_ == 0) return 0;
  std::vector<std::uint16_t> p(nroots_);
  const std::uint16_t* pa = &perm_[static_cast<std::size_t>(a) * nroots_];
  const std::uint16_t* pb = &perm_[static_cast<std::size_t>(b) * nroots_];
  for (std::size_t r = 0; r < nroots_; ++r) p[r] = pa[pb[r]];
  return lookup_.at(key(p.data()));
}

ElementId Group::multiply(ElementId a, ElementId b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
  return compose_lookup(a, b);
}

ElementId Group::multiply(std::initializer_list<ElementId> xs) const {
  ElementId r = identity();
  for (ElementId x : xs) r = multiply(r, x);
  return r;
}

ElementId Group::conjugate(ElementId g, ElementId x) const { return multiply({g, x, inverse(g)}); }

ElementId Group::find(const std::vector<RootId>& perm) const {
  if (perm.size() != nroots_) return -1;
  std::vector<std::uint16_t> p(perm.begin(), perm.end());
  auto it = lookup_.find(key(p.data()));
  return it == lookup_.end() ? -1 : it->second;
}

ElementId Group::from_word(const std::vector<int>& word) const {
  ElementId r = identity();
  for (int i : word) r = multiply(r, gens_.at(i));
  return r;
}

std::vector<RootId> Group::inversion_set(ElementId w) const {
  std::vector<RootId> out;
  for (RootId r = 0; r < static_cast<RootId>(roots_->num_positive()); ++r)
    if (inverts(w, r)) out.push_back(r);
  return out;
}

std::vector<int> Group::left_descents(ElementId w) const {
  std::vector<int> out;
  ElementId wi = inverse(w);
  for (int i = 0; i < rank(); ++i)
    if (inverts(wi, roots_->simple(i))) out.push_back(i);
  return out;
}

std::vector<int> Group::reduced_word(ElementId w) const {
  std::vector<int> word;
  while (w != identity()) {
    int i = left_descents(w).front();
    word.push_back(i);
    w = multiply(gens_[i], w);
  }
  return word;
}

ElementId Group::reflection(RootId r) const {
  if (!roots_->is_positive(r)) r = roots_->negate(r);
  return reflections_.at(r);
}

ScalarMatrix Group::matrix(ElementId w) const {
  const int n = rank();
  ScalarMatrix m(n, ScalarVector(n));
  for (int j = 0; j < n; ++j) {
    const auto& col = roots_->coords(act(w, roots_->simple(j)));
    for (int i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return m;
}

ScalarVector Group::apply(ElementId w, const ScalarVector& v) const {
  const int n = rank();
  ScalarVector out(n, ExactScalar(roots_->field(), Rational(0)));
  for (int j = 0; j < n; ++j) {
    if (v[j].is_zero()) continue;
    const auto& col = roots_->coords(act(w, roots_->simple(j)));
    for (int i = 0; i < n; ++i) out[i] += col[i] * v[j];
  }
  return out;
}

bool Group::fixes(ElementId w, const Flat& x) const {
  for (const auto& b : x.basis)
    if (apply(w, b) != b) return false;
  return true;
}

std::vector<ElementId> generate_subgroup(const Group& g, const std::vector<ElementId>& gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<ElementId> out{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (ElementId s : gens) {
      ElementId u = g.multiply(s, out[k]);
      if (!seen[u]) {
        seen[u] = 1;
        out.push_back(u);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
ParabolicSubgroup make_parabolic(const Group& g, std::vector<ElementId> elems, Flat flat) {
  ParabolicSubgroup p;
  p.member.resize(g.order());
  for (ElementId e : elems) p.member.set(e);
  p.elements = std::move(elems);
  p.flat = std::move(flat);
  p.index_in_w = g.order() / p.elements.size();
  return p;
}
}  // namespace

ParabolicSubgroup pointwise_stabilizer(const Group& g, const Flat& flat) {
  std::vector<ElementId> elems;
  ElementId deepest = g.identity();
  for (ElementId w = 0; w < static_cast<ElementId>(g.order()); ++w) {
    if (!flat.subset_of(g.fixed_space(w))) continue;
    elems.push_back(w);
    if (g.reflection_length(w) > g.reflection_length(deepest)) deepest = w;
  }
  if (g.fixed_space(deepest) != flat) throw FlatNotInLattice("flat is not a fixed space of W");
  return make_parabolic(g, std::move(elems), flat);
}

ParabolicSubgroup standard_parabolic(const Group& g, const std::vector<int>& simple_indices) {
  std::vector<ElementId> gens;
  for (int i : simple_indices) gens.push_back(g.generator(i));
  auto elems = generate_subgroup(g, gens);
  ElementId deepest = g.identity();
  for (ElementId w : elems)
    if (g.reflection_length(w) > g.reflection_length(deepest)) deepest = w;
  return make_parabolic(g, std::move(elems), g.fixed_space(deepest));
}

ElementId min_coset_rep(const Group& g, ElementId w, const ParabolicSubgroup& p) {
  ElementId best = -1;
  for (ElementId x : p.elements) {
    ElementId u = g.multiply(w, x);
    if (best < 0 || g.coxeter_length(u) < g.coxeter_length(best)) best = u;
  }
  return best;
}

SubgroupSystem subgroup_system(const Group& g, const ParabolicSubgroup& p) {
  SubgroupSystem sys;
  const RootId npos = static_cast<RootId>(g.roots().num_positive());
  std::vector<char> in_p(npos, 0);
  for (RootId r = 0; r < npos; ++r)
    if (p.contains(g.reflection(r))) {
      in_p[r] = 1;
      sys.positive_roots.push_back(r);
    }
  for (RootId r : sys.positive_roots) {
    ElementId t = g.reflection(r);
    bool simple = true;
    for (RootId s : sys.positive_roots)
      if (s != r && g.inverts(t, s)) {
        simple = false;
        break;
      }
    if (simple) sys.simple_roots.push_back(r);
  }
  const int k = static_cast<int>(sys.simple_roots.size());
  IntMatrix m(k, std::vector<int>(k, 1));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      ElementId x = g.multiply(g.reflection(sys.simple_roots[i]), g.reflection(sys.simple_roots[j]));
      int ord = 1;
      for (ElementId y = x; y != g.identity(); y = g.multiply(y, x)) ++ord;
      m[i][j] = ord;
    }
  sys.datum = CoxeterDatum::from_matrix(m);
  return sys;
}

CoxeterElements bipartite_coxeter(const Group& g) {
  const auto& d = g.datum();
  d.validate();
  CoxeterElements ce{g.identity(), g.identity(), g.identity()};
  for (int i : d.bullet()) ce.bullet = g.multiply(ce.bullet, g.generator(i));
  for (int i : d.circle()) ce.circle = g.multiply(ce.circle, g.generator(i));
  ce.c = g.multiply(ce.bullet, ce.circle);
  if (g.coxeter_length(ce.c) != g.rank()) throw InvalidBipartition("bipartite product is not a Coxeter element");
  return ce;
}

}  // namespace coxcat
