#include "coxcat/complex.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/functional/hash.hpp>

#include "coxcat/errors.hpp"
#include "coxcat/smith.hpp"

namespace coxcat {

std::size_t FaceHash::operator()(const Face& f) const { return boost::hash_range(f.begin(), f.end()); }

AbstractComplex::AbstractComplex() { insert({}); }

void AbstractComplex::insert(const Face& f) {
  if (by_size_.size() <= f.size()) {
    by_size_.resize(f.size() + 1);
    index_.resize(f.size() + 1);
  }
  auto& idx = index_[f.size()];
  if (idx.count(f)) return;
  idx.emplace(f, by_size_[f.size()].size());
  by_size_[f.size()].push_back(f);
}

namespace {
void canonicalize(std::vector<std::vector<Face>>& by_size,
                  std::vector<std::unordered_map<Face, std::size_t, FaceHash>>& index) {
  for (std::size_t k = 0; k < by_size.size(); ++k) {
    std::sort(by_size[k].begin(), by_size[k].end());
    index[k].clear();
    for (std::size_t i = 0; i < by_size[k].size(); ++i) index[k].emplace(by_size[k][i], i);
  }
}
}  // namespace

AbstractComplex AbstractComplex::from_facets(const std::vector<Face>& facets) {
  AbstractComplex c;
  for (Face f : facets) {
    std::sort(f.begin(), f.end());
    if (f.size() > 24) throw std::length_error("facet too large to close under subsets");
    const std::size_t k = f.size();
    if (c.by_size_.size() > k && c.index_[k].count(f)) continue;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      Face sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) sub.push_back(f[i]);
      c.insert(sub);
    }
  }
  canonicalize(c.by_size_, c.index_);
  return c;
}

AbstractComplex AbstractComplex::from_faces(const std::vector<Face>& faces) {
  AbstractComplex c;
  for (Face f : faces) {
    std::sort(f.begin(), f.end());
    c.insert(f);
  }
  for (std::size_t k = 1; k < c.by_size_.size(); ++k)
    for (const auto& f : c.by_size_[k])
      for (std::size_t i = 0; i < k; ++i) {
        Face sub = f;
        sub.erase(sub.begin() + i);
        if (!c.index_[k - 1].count(sub)) throw std::invalid_argument("face set is not closed under subsets");
      }
  while (c.by_size_.size() > 1 && c.by_size_.back().empty()) {
    c.by_size_.pop_back();
    c.index_.pop_back();
  }
  canonicalize(c.by_size_, c.index_);
  return c;
}

const std::vector<Face>& AbstractComplex::faces_of_size(std::size_t k) const {
  static const std::vector<Face> none;
  return k < by_size_.size() ? by_size_[k] : none;
}

std::size_t AbstractComplex::num_faces() const {
  std::size_t n = 0;
  for (const auto& l : by_size_) n += l.size();
  return n;
}

std::optional<std::size_t> AbstractComplex::index(const Face& f) const {
  if (f.size() >= index_.size()) return std::nullopt;
  auto it = index_[f.size()].find(f);
  if (it == index_[f.size()].end()) return std::nullopt;
  return it->second;
}

std::vector<int> AbstractComplex::vertices() const {
  std::vector<int> v;
  for (const auto& f : faces_of_size(1)) v.push_back(f[0]);
  return v;
}

std::vector<long long> AbstractComplex::f_vector() const {
  std::vector<long long> f;
  for (const auto& l : by_size_) f.push_back(static_cast<long long>(l.size()));
  return f;
}

std::vector<Face> AbstractComplex::facets() const {
  std::vector<Face> out;
  for (std::size_t k = 0; k < by_size_.size(); ++k) {
    std::vector<char> covered(by_size_[k].size(), 0);
    if (k + 1 < by_size_.size())
      for (const auto& g : by_size_[k + 1])
        for (std::size_t i = 0; i <= k; ++i) {
          Face sub = g;
          sub.erase(sub.begin() + i);
          covered[index_[k].at(sub)] = 1;
        }
    for (std::size_t i = 0; i < by_size_[k].size(); ++i)
      if (!covered[i]) out.push_back(by_size_[k][i]);
  }
  return out;
}

bool AbstractComplex::is_pure() const {
  for (const auto& f : facets())
    if (f.size() + 1 != by_size_.size()) return false;
  return true;
}

AbstractComplex AbstractComplex::link(const Face& f) const {
  std::vector<Face> out;
  for (std::size_t k = f.size(); k < by_size_.size(); ++k)
    for (const auto& g : by_size_[k]) {
      if (!std::includes(g.begin(), g.end(), f.begin(), f.end())) continue;
      Face rest;
      std::set_difference(g.begin(), g.end(), f.begin(), f.end(), std::back_inserter(rest));
      out.push_back(rest);
    }
  if (out.empty()) throw std::invalid_argument("link of a non-face");
  return from_faces(out);
}

long long HomologyProfile::betti(int d) const {
  auto it = degrees.find(d);
  return it == degrees.end() ? 0 : it->second.betti;
}

bool HomologyProfile::torsion_free() const {
  for (const auto& [d, h] : degrees)
    if (!h.torsion.empty()) return false;
  return true;
}

bool HomologyProfile::concentrated_in(int d) const {
  for (const auto& [k, h] : degrees) {
    if (!h.torsion.empty()) return false;
    if (k != d && h.betti != 0) return false;
  }
  return true;
}

long long HomologyProfile::euler() const {
  long long e = 0;
  for (const auto& [d, h] : degrees) e += (d % 2 == 0 ? 1 : -1) * h.betti;
  return e;
}

HomologyProfile homology(const AbstractComplex& c) {
  const int top = c.dimension();
  // ranks[k] and torsion[k] describe the boundary from size-k faces to size-(k-1) faces.
  std::vector<std::size_t> ranks(top + 3, 0);
  std::vector<std::vector<BigInt>> tors(top + 3);
  for (int k = 1; k <= top + 1; ++k) {
    SparseMatrix m;
    m.rows = c.count_of_size(k - 1);
    for (const auto& f : c.faces_of_size(k)) {
      std::vector<std::pair<int, std::int64_t>> col;
      for (int i = 0; i < k; ++i) {
        Face sub = f;
        sub.erase(sub.begin() + i);
        col.emplace_back(static_cast<int>(*c.index(sub)), i % 2 == 0 ? 1 : -1);
      }
      m.columns.push_back(std::move(col));
    }
    auto snf = smith_normal_form(std::move(m));
    ranks[k] = snf.rank;
    tors[k] = snf.torsion;
  }
  HomologyProfile p;
  for (int d = -1; d <= top; ++d) {
    const int k = d + 1;  // faces of size k have dimension d
    DegreeHomology h;
    h.betti = static_cast<long long>(c.count_of_size(k)) - static_cast<long long>(ranks[k]) -
              static_cast<long long>(ranks[k + 1]);
    h.torsion = tors[k + 1];
    p.degrees[d] = h;
  }
  return p;
}

long long reduced_euler(const AbstractComplex& c) {
  long long e = 0;
  auto f = c.f_vector();
  for (std::size_t k = 0; k < f.size(); ++k) e += (k % 2 == 0 ? -1 : 1) * f[k];
  return e;
}

std::vector<long long> f_to_h(const std::vector<long long>& f) {
  const long long d = static_cast<long long>(f.size()) - 1;
  std::vector<long long> h(d + 1, 0);
  auto binom = [](long long n, long long k) {
    if (k < 0 || k > n) return 0LL;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (long long k = 0; k <= d; ++k)
    for (long long i = 0; i <= k; ++i) h[k] += ((k - i) % 2 == 0 ? 1 : -1) * binom(d - i, k - i) * f[i];
  return h;
}

std::vector<long long> h_vector(const AbstractComplex& c) {
  if (!c.is_pure()) throw NotPure("h-vector of a non-pure complex");
  return f_to_h(c.f_vector());
}

AbstractComplex join(const AbstractComplex& a, const AbstractComplex& b) {
  int shift = 0;
  for (int v : a.vertices()) shift = std::max(shift, v + 1);
  std::vector<Face> faces;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(a.dimension() + 1); ++i)
    for (const auto& fa : a.faces_of_size(i))
      for (std::size_t j = 0; j <= static_cast<std::size_t>(b.dimension() + 1); ++j)
        for (const auto& fb : b.faces_of_size(j)) {
          Face f = fa;
          for (int v : fb) f.push_back(v + shift);
          faces.push_back(std::move(f));
        }
  return AbstractComplex::from_faces(faces);
}

}  // namespace coxcat
