#include "coxcat/serialize.hpp"

namespace coxcat {

Json to_json(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json to_json(const Rational& q) {
  Rational x = q;
  x.canonicalize();
  if (x.get_den() == 1) return to_json(BigInt(x.get_num()));
  return x.get_str();
}

Json to_json(const ExactScalar& x) {
  if (x.is_rational()) return to_json(x.rational_value());
  return x.to_string();
}

Json to_json(const Polynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_json(c));
  return a;
}

Json to_json(const HomologyProfile& h) {
  Json out = Json::object();
  for (const auto& [deg, d] : h.degrees) {
    if (d.betti == 0 && d.torsion.empty()) continue;
    Json t = Json::array();
    for (const auto& x : d.torsion) t.push_back(to_json(x));
    out[std::to_string(deg)] = {{"rank", d.betti}, {"torsion", t}};
  }
  return out;
}

Json to_json(const AbstractComplex& c) {
  Json faces = Json::array();
  for (std::size_t k = 1; k <= static_cast<std::size_t>(c.dimension() + 1); ++k)
    for (const auto& f : c.faces_of_size(k)) faces.push_back(f);
  return {{"f_vector", c.f_vector()}, {"faces", faces}};
}

Json to_json(const TypeCounts& counts) {
  Json a = Json::array();
  for (const auto& [l, c] : counts) a.push_back({{"type", l}, {"count", to_json(c)}});
  return a;
}

Json group_json(const Group& g, bool with_elements) {
  const auto& rs = g.roots();
  Json roots = Json::array();
  for (RootId r = 0; r < static_cast<RootId>(rs.size()); ++r) {
    Json c = Json::array();
    for (const auto& x : rs.coords(r)) c.push_back(to_json(x));
    roots.push_back(c);
  }
  Json out = {{"type", g.datum().type_label},
              {"rank", g.rank()},
              {"coxeter_matrix", g.datum().matrix},
              {"order", g.order()},
              {"positive_roots", rs.num_positive()},
              {"roots", roots}};
  if (g.datum().irreducible()) out["coxeter_number"] = rs.coxeter_number();
  if (with_elements) {
    Json els = Json::array();
    for (ElementId w = 0; w < static_cast<ElementId>(g.order()); ++w) {
      Json p = Json::array();
      for (RootId r = 0; r < static_cast<RootId>(rs.size()); ++r) p.push_back(g.act(w, r));
      els.push_back(p);
    }
    out["elements"] = els;
  }
  return out;
}

Json nc_json(const NoncrossingLattice& nc) {
  const Group& g = nc.group();
  Json els = Json::array();
  for (std::size_t i = 0; i < nc.size(); ++i) {
    const int id = static_cast<int>(i);
    Json e = {{"id", id}, {"rank", nc.rank(id)}, {"word", g.reduced_word(nc.element(id))}};
    if (nc.bipartite()) e["kreweras"] = nc.kreweras(id);
    e["covers"] = nc.poset().upper_covers()[i];
    els.push_back(e);
  }
  return {{"coxeter_word", g.reduced_word(nc.coxeter())}, {"size", nc.size()}, {"elements", els}};
}

Json cluster_json(const ClusterComplex& d) {
  const auto& rs = d.group().roots();
  Json verts = Json::array();
  for (std::size_t v = 0; v < d.num_vertices(); ++v) {
    const auto& cr = d.vertex(static_cast<int>(v));
    Json c = Json::array();
    for (const auto& x : rs.coords(cr.root)) c.push_back(to_json(x));
    verts.push_back({{"root", c}, {"color", cr.color}});
  }
  Json faces = Json::array();
  const auto& dc = d.complex();
  for (std::size_t k = 1; k <= static_cast<std::size_t>(dc.dimension() + 1); ++k)
    for (const auto& f : dc.faces_of_size(k))
      faces.push_back({{"vertices", f}, {"product", d.product(f)}, {"underline", d.underline(f)}});
  return {{"m", d.m()}, {"f_vector", dc.f_vector()}, {"vertices", verts}, {"faces", faces}};
}

Json pf_json(const ParkingPoset& pf) {
  const Group& g = pf.group();
  Json els = Json::array();
  for (std::size_t i = 0; i < pf.size(); ++i) {
    const auto& c = pf.coset(static_cast<int>(i));
    els.push_back({{"pi", c.pi},
                   {"rank", pf.rank(static_cast<int>(i))},
                   {"rep", g.reduced_word(c.rep)},
                   {"covers", pf.poset().upper_covers()[i]}});
  }
  return {{"size", pf.size()}, {"elements", els}};
}

Json regions_json(const CatalanRegions& r) {
  const auto& a = r.arrangement();
  const auto& rs = a.group().roots();
  Json hyps = Json::array();
  for (const auto& h : a.hyperplanes()) hyps.push_back({{"root", rs.int_coords(h.root)}, {"level", h.level}});
  Json regs = Json::array();
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto& reg = r.region(static_cast<int>(i));
    Json w = Json::array();
    for (const auto& x : reg.witness) w.push_back(to_json(x));
    std::string sign;
    for (auto s : reg.sign) sign.push_back(s > 0 ? '+' : '-');
    const auto& st = r.stats(static_cast<int>(i));
    regs.push_back({{"sign", sign},
                    {"witness", w},
                    {"walls", st.walls},
                    {"floors", st.floors},
                    {"m_floors", st.m_floors},
                    {"dominant", is_dominant(a, reg.sign)}});
  }
  return {{"hyperplanes", hyps}, {"regions", regs}};
}

}  // namespace coxcat
