#include <algorithm>

#include "coxcat/cluster.hpp"
#include "coxcat/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coxcat;

namespace {

ClusterComplex make_delta(const char* type, int m) {
  auto g = Group::build(CoxeterDatum::parse(type));
  return ClusterComplex(std::make_shared<const NoncrossingLattice>(g), m);
}

long long pow_ll(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_SUITE("cluster") {
  TEST_CASE("rotation on A2") {
    auto d = make_delta("A2", 1);
    const auto& rs = d.group().roots();
    RootId a1 = rs.simple(0), a2 = rs.simple(1);
    RootId a12 = rs.find({ExactScalar(1), ExactScalar(1)});
    std::vector<ColoredRoot> orbit{{rs.negate(a1), 1}, {a1, 1}, {a2, 1}, {rs.negate(a2), 1}, {a12, 1}};
    for (std::size_t i = 0; i < orbit.size(); ++i)
      CHECK(d.rotate(d.vertex_id(orbit[i])) == d.vertex_id(orbit[(i + 1) % orbit.size()]));
    CHECK(d.rotation_order() == 5);
  }

  TEST_CASE("rotation and compatibility invariants") {
    for (const char* t : {"A2", "A3", "B3", "H3", "I2(5)", "D4", "A1xA2"})
      for (int m : {1, 2}) {
        auto d = make_delta(t, m);
        const int nv = static_cast<int>(d.num_vertices());
        CAPTURE(t);
        CAPTURE(m);
        CHECK(nv == m * static_cast<int>(d.group().roots().num_positive()) + d.group().rank());
        if (d.group().datum().irreducible())
          CHECK((m * d.group().roots().coxeter_number() + 2) % d.rotation_order() == 0);
        for (int u = 0; u < nv; ++u)
          for (int v = 0; v < nv; ++v) {
            CHECK(d.compatible(u, v) == d.compatible(v, u));
            CHECK(d.compatible(u, v) == d.compatible(d.rotate(u), d.rotate(v)));
          }
        // R induces an automorphism.
        auto facets = d.complex().facets();
        for (const auto& f : facets) {
          Face r;
          for (int v : f) r.push_back(d.rotate(v));
          std::sort(r.begin(), r.end());
          CHECK(d.complex().contains(r));
        }
      }
    auto d = make_delta("A2", 1);
    const auto& rs = d.group().roots();
    int n1 = d.vertex_id({rs.negate(rs.simple(0)), 1});
    int n2 = d.vertex_id({rs.negate(rs.simple(1)), 1});
    CHECK(d.compatible(n1, n2));
    CHECK(!d.compatible(n1, d.vertex_id({rs.simple(0), 1})));
  }

  TEST_CASE("face counts match Fuss-Catalan numbers") {
    CHECK(make_delta("A2", 1).complex().f_vector() == std::vector<long long>{1, 5, 5});
    CHECK(make_delta("A3", 1).complex().count_of_size(3) == 14);
    struct Case { const char* type; char fam; int n; int k; };
    for (Case cs : {Case{"A3", 'A', 3, 0}, Case{"B3", 'B', 3, 0}, Case{"H3", 'H', 3, 0}, Case{"D4", 'D', 4, 0},
                    Case{"I2(7)", 'I', 2, 7}, Case{"A4", 'A', 4, 0}})
      for (int m : {1, 2}) {
        if (std::string(cs.type) == "A4" && m == 2) continue;
        auto d = make_delta(cs.type, m);
        auto e = oracle::exponents(cs.fam, cs.n, cs.k);
        CAPTURE(cs.type);
        CAPTURE(m);
        CHECK(d.complex().is_pure());
        CHECK(d.complex().dimension() == cs.n - 1);
        CHECK(static_cast<long>(d.complex().count_of_size(cs.n)) == oracle::fuss_catalan(e, m));
        CHECK(static_cast<long>(d.positive().count_of_size(cs.n)) == oracle::fuss_catalan(e, m, -2));
      }
    for (const char* t : {"A3", "B2", "H3"}) {
      auto d0 = make_delta(t, 0);
      CHECK(d0.complex().facets().size() == 1);
      CHECK(d0.complex().facets()[0].size() == static_cast<std::size_t>(d0.group().rank()));
    }
  }

  TEST_CASE("flagness and links of negated simples") {
    auto d = make_delta("B3", 1);
    const int nv = static_cast<int>(d.num_vertices());
    for (const auto& f : d.complex().faces_of_size(2)) CHECK(d.compatible(f[0], f[1]));
    for (int a = 0; a < nv; ++a)
      for (int b = a + 1; b < nv; ++b)
        for (int c = b + 1; c < nv; ++c)
          if (d.compatible(a, b) && d.compatible(a, c) && d.compatible(b, c)) CHECK(d.complex().contains({a, b, c}));
    for (int i = 0; i < 3; ++i) {
      auto link = d.complex().link({i});
      std::vector<int> idx;
      for (int j = 0; j < 3; ++j)
        if (j != i) idx.push_back(j);
      auto sub = parabolic_group(d.group(), standard_parabolic(d.group(), idx));
      CHECK(link.f_vector() == ClusterComplex(std::make_shared<const NoncrossingLattice>(sub), 1).complex().f_vector());
    }
  }

  TEST_CASE("face products and underline") {
    for (const char* t : {"A2", "A3", "B3", "H3", "I2(5)"})
      for (int m : {1, 2}) {
        auto d = make_delta(t, m);
        const auto& nc = d.nc();
        const Group& g = d.group();
        CAPTURE(t);
        CHECK(nc.element(d.product({})) == g.identity());
        CHECK(d.underline({}) == nc.bottom());
        for (int v = 0; v < static_cast<int>(d.num_vertices()); ++v)
          CHECK(nc.element(d.product({v})) == g.reflection(d.reflection_root(v)));
        for (std::size_t k = 0; k <= static_cast<std::size_t>(g.rank()); ++k)
          for (const auto& f : d.complex().faces_of_size(k)) {
            CHECK(g.reflection_length(nc.element(d.product(f))) == static_cast<int>(k));
            CHECK(nc.rank(d.underline(f)) == static_cast<int>(k));
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
              Face sub = f;
              sub.erase(sub.begin() + static_cast<long>(drop));
              CHECK(nc.leq(d.underline(sub), d.underline(f)));
            }
          }
        for (const auto& f : d.complex().facets()) CHECK(d.underline(f) == nc.top());
      }
  }

  TEST_CASE("restricted subcomplexes") {
    for (const char* t : {"A2", "A3", "B3"})
      for (int m : {1, 2}) {
        auto d = make_delta(t, m);
        const auto& nc = d.nc();
        CHECK(d.restricted(nc.bottom(), false).num_faces() == 1);
        CHECK(d.restricted(nc.top(), false).num_faces() == d.complex().num_faces());
        for (int pi = 0; pi < static_cast<int>(nc.size()); ++pi)
          for (bool pos : {false, true}) {
            auto r = d.restricted(pi, pos);
            CHECK(r.is_pure());
            if (nc.rank(pi) > 0 && r.num_faces() > 1) CHECK(r.dimension() == nc.rank(pi) - 1);
          }
      }
    auto d = make_delta("A2", 1);
    for (int a : d.nc().atoms()) {
      auto r = d.restricted(a, false);
      CHECK(r.dimension() == 0);
      CHECK(r.is_pure());
    }
  }

  TEST_CASE("links match parabolic cluster complexes") {
    for (auto [t, m] : {std::pair<const char*, int>{"A3", 1}, {"A2", 2}, {"B3", 1}, {"H3", 1}}) {
      auto d = make_delta(t, m);
      for (std::size_t k = 0; k <= static_cast<std::size_t>(d.group().rank()); ++k)
        for (const auto& f : d.complex().faces_of_size(k)) {
          auto lc = link_fvector_check(d, f);
          CAPTURE(t);
          CHECK(lc.passed());
        }
    }
    auto d = make_delta("A3", 1);
    CHECK(link_fvector_check(d, {}).link_f == d.complex().f_vector());
    CHECK(link_fvector_check(d, d.complex().facets()[0]).link_f == std::vector<long long>{1});
  }

  TEST_CASE("alternating character sums") {
    auto d = make_delta("A2", 1);
    const Group& g = d.group();
    CHECK(alternating_character_sum(d, false, g.identity()) == -16);
    // w_o of A2 is a reflection; c has reflection length 2.
    CHECK(alternating_character_sum(d, false, g.longest()) == 4);
    CHECK(alternating_character_sum(d, false, d.nc().coxeter()) == -1);
    CHECK(alternating_character_sum(d, true, g.identity()) == -4);
    for (const char* t : {"A2", "B2", "A3", "I2(5)"})
      for (int m : {1, 2}) {
        auto dd = make_delta(t, m);
        const Group& gg = dd.group();
        const int n = gg.rank(), h = gg.roots().coxeter_number();
        for (ElementId w = 0; w < static_cast<ElementId>(gg.order()); ++w) {
          int l = gg.reflection_length(w);
          long long sign = ((n - 1 + l) % 2 == 0) ? 1 : -1;
          CAPTURE(t);
          CHECK(alternating_character_sum(dd, false, w) == sign * pow_ll(m * h + 1, n - l));
          CHECK(alternating_character_sum(dd, true, w) == sign * pow_ll(m * h - 1, n - l));
        }
      }
  }

  TEST_CASE("Coxeter-element clusters agree with the bipartite complex") {
    for (const char* t : {"A2", "A3", "B3", "H3", "D4"}) {
      auto d = make_delta(t, 1);
      const Group& g = d.group();
      std::vector<int> word;
      for (int col : {0, 1})
        for (int i = 0; i < g.rank(); ++i)
          if (g.datum().color[i] == col) word.push_back(i);
      auto cc = c_cluster_complex(g, word);
      CAPTURE(t);
      CHECK(cc.complex.f_vector() == d.complex().f_vector());
      for (const auto& f : d.complex().facets()) CHECK(cc.complex.contains(f));
    }
    auto g = Group::build(CoxeterDatum::parse("A3"));
    auto lin = c_cluster_complex(*g, {0, 1, 2});
    CHECK(lin.complex.count_of_size(3) == 14);
    CHECK_THROWS_AS(c_cluster_complex(*g, {0, 1, 0}), NotCoxeterElement);
  }
}
