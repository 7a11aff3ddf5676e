#include "coxcat/arrangement.hpp"

#include <deque>

#include "coxcat/errors.hpp"

namespace coxcat {

bool Arrangement::central() const {
  for (const auto& k : levels)
    if (sgn(k) != 0) return false;
  return true;
}

void Arrangement::add(std::vector<Rational> normal, Rational level) {
  if (static_cast<int>(normal.size()) != dim) throw std::invalid_argument("hyperplane of wrong dimension");
  normals.push_back(std::move(normal));
  levels.push_back(std::move(level));
}

Arrangement reflection_arrangement(const Group& g) {
  const auto& rs = g.roots();
  Arrangement a;
  a.dim = g.rank();
  for (RootId r = 0; r < static_cast<RootId>(rs.num_positive()); ++r) {
    std::vector<Rational> v;
    for (const auto& x : rs.coords(r)) {
      if (!x.is_rational()) throw NonCrystallographic("reflection arrangement needs rational roots");
      v.push_back(x.rational_value());
    }
    a.add(std::move(v));
  }
  return a;
}

namespace {

using Rows = std::vector<std::vector<Rational>>;

// Reduce `row` against an RREF system; true if it reduces to zero.
bool in_span(const Rows& sys, const std::vector<int>& piv, std::vector<Rational> row) {
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const Rational f = row[piv[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * sys[i][j];
  }
  for (const auto& x : row)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace

IntersectionPoset intersection_poset(const Arrangement& a) {
  const int n = a.dim;
  const std::size_t H = a.size();
  std::vector<std::vector<Rational>> aug(H);
  for (std::size_t h = 0; h < H; ++h) {
    aug[h] = a.normals[h];
    aug[h].push_back(a.levels[h]);
  }
  struct Node {
    Bitset hyps;
    Rows rows;
    std::vector<int> piv;
  };
  std::vector<Node> nodes;
  std::map<Bitset, int> index;
  nodes.push_back({Bitset(H), {}, {}});
  index[nodes[0].hyps] = 0;
  for (std::size_t cur = 0; cur < nodes.size(); ++cur) {
    Bitset done = nodes[cur].hyps;
    for (std::size_t h = 0; h < H; ++h) {
      if (done.test(h)) continue;
      Rows rows = nodes[cur].rows;
      rows.push_back(aug[h]);
      auto piv = rref(rows, n + 1);
      done.set(h);
      if (!piv.empty() && piv.back() == n) continue;  // parallel, empty intersection
      Bitset hyps(H);
      for (std::size_t k = 0; k < H; ++k)
        if (in_span(rows, piv, aug[k])) hyps.set(k);
      done |= hyps;
      if (index.count(hyps)) continue;
      index[hyps] = static_cast<int>(nodes.size());
      nodes.push_back({hyps, std::move(rows), std::move(piv)});
    }
  }
  // BFS from V discovers flats by increasing codimension already.
  IntersectionPoset p;
  p.ambient = n;
  for (auto& nd : nodes) {
    p.dim.push_back(n - static_cast<int>(nd.rows.size()));
    p.hyperplanes.push_back(nd.hyps);
  }
  const auto& hs = p.hyperplanes;
  p.order = FinitePoset(nodes.size(), [&](int x, int y) { return hs[x].is_subset_of(hs[y]); });
  return p;
}

IntersectionPoset intersection_poset(const IntersectionLattice& l) {
  IntersectionPoset p;
  p.ambient = l.group().rank();
  for (std::size_t i = 0; i < l.size(); ++i) p.dim.push_back(l.flat(static_cast<int>(i)).dim());
  p.order = l.poset();
  return p;
}

Polynomial IntersectionPoset::restriction_char_poly(int x) const {
  const auto mu = order.mobius_from(x);
  Polynomial out;
  for (std::size_t y = 0; y < size(); ++y)
    if (mu[y] != 0) out += Polynomial::monomial(BigInt(static_cast<long>(mu[y])), dim[y]);
  return out;
}

Polynomial IntersectionPoset::localization_char_poly(int y, int x) const {
  const auto mu = order.mobius_from(x);
  Polynomial out;
  for (std::size_t z = 0; z < size(); ++z)
    if (mu[z] != 0 && order.leq(static_cast<int>(z), y))
      out += Polynomial::monomial(BigInt(static_cast<long>(mu[z])), dim[z]);
  return out;
}

BigInt zaslavsky_regions(const IntersectionPoset& p, int x) {
  BigInt r = p.restriction_char_poly(x)(BigInt(-1));
  return p.dim[x] % 2 == 0 ? r : BigInt(-r);
}

namespace {

struct KungData {
  Polynomial whole;
  std::vector<std::pair<Polynomial, Polynomial>> terms;  // (chi(K_Y), chi(K^Y))
};

KungData kung_data(const IntersectionPoset& p, int x) {
  KungData d;
  d.whole = p.restriction_char_poly(x);
  for (std::size_t y = 0; y < p.size(); ++y)
    if (p.order.leq(x, static_cast<int>(y)))
      d.terms.emplace_back(p.localization_char_poly(static_cast<int>(y), x),
                           p.restriction_char_poly(static_cast<int>(y)));
  return d;
}

std::pair<BigInt, BigInt> eval(const KungData& d, const BigInt& s, const BigInt& t) {
  BigInt rhs = 0;
  for (const auto& [loc, res] : d.terms) rhs += loc(s) * res(t);
  return {d.whole(s * t), rhs};
}

}  // namespace

std::pair<BigInt, BigInt> kung_sides(const IntersectionPoset& p, const BigInt& s, const BigInt& t, int x) {
  return eval(kung_data(p, x), s, t);
}

KungReport kung_identity_check(const IntersectionPoset& p, int x) {
  const auto d = kung_data(p, x);
  const long r = p.dim[x] + 1;
  KungReport rep;
  for (long s = -r; s <= r; ++s)
    for (long t = -r; t <= r; ++t) {
      auto [l, rr] = eval(d, BigInt(s), BigInt(t));
      ++rep.samples;
      if (l != rr) ++rep.mismatches;
    }
  return rep;
}

}  // namespace coxcat
