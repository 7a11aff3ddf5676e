#include "coxcat/enumerative.hpp"

#include <algorithm>
#include <stdexcept>

#include "coxcat/errors.hpp"

namespace coxcat {

Polynomial char_poly_restriction(const IntersectionLattice& l, int x) {
  const auto mu = l.poset().mobius_from(x);
  Polynomial out;
  for (std::size_t y = 0; y < l.size(); ++y)
    if (mu[y] != 0)
      out += Polynomial::monomial(BigInt(static_cast<long>(mu[y])), l.flat(static_cast<int>(y)).dim());
  return out;
}

std::vector<long long> os_exponents(const IntersectionLattice& l, int x) {
  Polynomial chi = char_poly_restriction(l, x);
  const int d = l.flat(x).dim();
  if (chi.degree() != d || chi[d] != 1) throw NonIntegerRoots("chi(A^X) is not monic of degree dim X");
  // roots sum to the number of hyperplanes of A^X, so each is at most -chi[d-1]
  const long bound = d == 0 ? 0 : BigInt(-chi[d - 1]).get_si();
  std::vector<long long> roots;
  for (long b = 1; b <= bound && chi.degree() > 0;) {
    Polynomial q;
    if (chi.divide_linear(BigInt(b), &q)) {
      roots.push_back(b);
      chi = q;
    } else {
      ++b;
    }
  }
  if (chi.degree() != 0) throw NonIntegerRoots("unfactored part " + chi.to_string("t"));
  return roots;
}

Polynomial descent_polynomial(const Group& g, const ParabolicSubgroup& p) {
  const auto sys = subgroup_system(g, p);
  std::vector<BigInt> c(sys.simple_roots.size() + 1, 0);
  for (ElementId w : p.elements) {
    // s is a left descent of w iff w^-1(alpha_s) < 0
    const ElementId wi = g.inverse(w);
    int des = 0;
    for (RootId r : sys.simple_roots)
      if (!g.roots().is_positive(g.act(wi, r))) ++des;
    c[des] += 1;
  }
  return Polynomial(std::move(c));
}

std::vector<FlatOrbit> flat_orbits(const IntersectionLattice& l) {
  std::vector<FlatOrbit> out;
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < l.size(); ++i) {
    const int rep = l.orbit(static_cast<int>(i));
    auto it = pos.find(rep);
    if (it != pos.end()) {
      ++out[it->second].size;
      continue;
    }
    pos[rep] = out.size();
    FlatOrbit o;
    o.representative = rep;
    o.dim = l.flat(rep).dim();
    o.size = 1;
    o.exponents = os_exponents(l, rep);
    const auto& p = l.stabilizer(rep);
    o.descent = descent_polynomial(l.group(), p);
    o.stabilizer_order = p.order();
    o.normalizer_order = l.setwise_stabilizer(rep).size();
    const auto sys = subgroup_system(l.group(), p);
    o.type = sys.simple_roots.empty() ? "1" : classify(sys.datum.matrix);
    out.push_back(std::move(o));
  }
  return out;
}

namespace {

void require_irreducible(const Group& g) {
  if (!g.datum().irreducible()) throw ReducibleGroup(g.datum().type_label + " is reducible");
}

BigInt product_term(const std::vector<long long>& b, long base, int sign) {
  BigInt p = 1;
  for (long long x : b) p *= BigInt(base + sign * static_cast<long>(x));
  return p;
}

long shift(const Group& g, int m, bool positive_only) {
  return static_cast<long>(m) * g.roots().coxeter_number() + (positive_only ? -1 : 1);
}

}  // namespace

Polynomial f_poly_formula(const IntersectionLattice& l, int m, bool positive_only) {
  require_irreducible(l.group());
  const long base = shift(l.group(), m, positive_only);
  Polynomial out;
  for (const auto& o : flat_orbits(l))
    out += Polynomial::monomial(BigInt(static_cast<unsigned long>(o.size)) * product_term(o.exponents, base, 1), o.dim);
  return out;
}

Polynomial f_poly_formula(const Group& g, int m, bool positive_only) {
  require_irreducible(g);
  return f_poly_formula(IntersectionLattice(g), m, positive_only);
}

Polynomial h_poly_formula(const IntersectionLattice& l, int m, bool positive_only) {
  require_irreducible(l.group());
  const long base = shift(l.group(), m, positive_only);
  Polynomial out;
  for (const auto& o : flat_orbits(l))
    out += Polynomial::monomial(BigInt(static_cast<unsigned long>(o.size)) * product_term(o.exponents, base, -1), o.dim) *
           o.descent;
  return out;
}

Polynomial h_poly_formula(const Group& g, int m, bool positive_only) {
  require_irreducible(g);
  return h_poly_formula(IntersectionLattice(g), m, positive_only);
}

std::vector<OrbitCountRow> orbit_type_counts(const ClusterComplex& d, const IntersectionLattice& l,
                                             bool positive_only) {
  const Group& g = d.group();
  require_irreducible(g);
  const int n = g.rank();
  const long base = shift(g, d.m(), positive_only);
  std::map<int, BigInt> actual;
  const auto& dc = d.complex();
  for (std::size_t k = 0; k <= static_cast<std::size_t>(dc.dimension() + 1); ++k)
    for (const auto& f : dc.faces_of_size(k)) {
      if (positive_only && !f.empty() && f.front() < n) continue;
      const ElementId u = d.nc().element(d.underline(f));
      actual[l.orbit(l.of_element(u))] += 1;
    }
  std::vector<OrbitCountRow> out;
  for (const auto& o : flat_orbits(l)) {
    OrbitCountRow row;
    row.representative = o.representative;
    row.type = o.type;
    row.actual = actual.count(o.representative) ? actual[o.representative] : BigInt(0);
    const BigInt num = product_term(o.exponents, base, 1);
    const BigInt idx(static_cast<unsigned long>(o.normalizer_order / o.stabilizer_order));
    // a non-integral quotient can never match an actual count
    row.expected = num % idx == 0 ? BigInt(num / idx) : BigInt(-1);
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<int> kung_product_failures(const IntersectionLattice& l, long t) {
  const auto p = intersection_poset(l);
  std::vector<std::vector<long long>> b(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) b[i] = os_exponents(l, static_cast<int>(i));
  std::vector<int> bad;
  for (std::size_t x = 0; x < l.size(); ++x) {
    const int xi = static_cast<int>(x);
    BigInt rhs = 0;
    for (std::size_t y = 0; y < l.size(); ++y) {
      const int yi = static_cast<int>(y);
      if (!p.order.leq(xi, yi)) continue;
      BigInt r = p.localization_char_poly(yi, xi)(BigInt(-1));
      if (p.dim[xi] % 2 != 0) r = -r;
      rhs += product_term(b[y], t, -1) * r;
    }
    if (rhs != product_term(b[x], t, 1)) bad.push_back(xi);
  }
  return bad;
}

Polynomial quasi_stirling(int n) {
  if (n < 1) throw std::invalid_argument("quasi_stirling needs n >= 1");
  std::vector<BigInt> c;
  for (int j = 0; j <= 2 * n + 1; ++j) {
    Rational acc = 0;
    for (int i = 0; i <= j; ++i) {
      BigInt term;
      mpz_bin_uiui(term.get_mpz_t(), 2 * n + 1, j - i);
      BigInt pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), i, n);
      BigInt bn;
      mpz_bin_uiui(bn.get_mpz_t(), n + i, i);
      term *= pw * bn;
      if ((j - i) % 2 != 0) term = -term;
      acc += Rational(term, n + 1);
    }
    acc.canonicalize();
    if (acc.get_den() != 1) throw std::logic_error("quasi-Stirling coefficient is not an integer");
    c.push_back(acc.get_num());
  }
  return Polynomial(std::move(c));
}

}  // namespace coxcat
