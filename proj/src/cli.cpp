#include "coxcat/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>

#include "coxcat/arrangement.hpp"
#include "coxcat/catalan.hpp"
#include "coxcat/cpf.hpp"
#include "coxcat/enumerative.hpp"
#include "coxcat/errors.hpp"
#include "coxcat/lattice.hpp"
#include "coxcat/report.hpp"
#include "coxcat/typea.hpp"

namespace coxcat::cli {

namespace {

namespace fs = std::filesystem;

struct Config {
  std::string type;
  int m = 1;
  bool positive = false;
  std::string out = "text";
  int jobs = 1;
  std::string cache;
  bool timings = false;
};

// Raised for bad configurations detected after argument parsing.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Component {
  int rank = 0, h = 0;
  std::vector<long long> exponents;
};

BigInt ipow(BigInt b, long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= b;
  return r;
}

std::string word_label(const Group& g, ElementId w) {
  std::string s;
  for (int i : g.reduced_word(w)) s += "s" + std::to_string(i + 1);
  return s.empty() ? "e" : s;
}

std::string file_label(std::string s) {
  for (char& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  return s;
}

std::uint64_t fingerprint(const AbstractComplex& c) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  for (std::size_t k = 1; k <= static_cast<std::size_t>(c.dimension() + 1); ++k)
    for (const auto& f : c.faces_of_size(k)) {
      for (int v : f) mix(static_cast<std::uint64_t>(v) + 1);
      mix(0);
    }
  return h;
}

HomologyProfile homology_from_json(const Json& j) {
  HomologyProfile p;
  for (const auto& [deg, d] : j.items()) {
    DegreeHomology dh;
    dh.betti = d.at("rank").get<long long>();
    for (const auto& t : d.at("torsion")) dh.torsion.emplace_back(t.is_string() ? t.get<std::string>() : t.dump());
    p.degrees[std::stoi(deg)] = dh;
  }
  return p;
}

Outcome equal(Json expected, Json actual) {
  Outcome o;
  o.pass = expected == actual;
  o.expected = std::move(expected);
  o.actual = std::move(actual);
  return o;
}

Json poly_json(const std::vector<long long>& v) { return to_json(f_polynomial(v)); }

Json counts_json(const TypeCounts& c) {
  TypeCounts nz;
  for (const auto& [l, x] : c)
    if (x != 0) nz[l] = x;
  return to_json(nz);
}

// Shared, lazily built objects. Every getter is safe to call from the pool.
class Context {
 public:
  Context(Config cfg, std::ostream& err) : cfg_(std::move(cfg)), err_(err) {
    datum_ = CoxeterDatum::parse(cfg_.type);
    datum_.validate();
  }

  const Config& cfg() const { return cfg_; }
  const CoxeterDatum& datum() const { return datum_; }
  std::string label() const { return datum_.type_label.empty() ? cfg_.type : datum_.type_label; }
  bool irreducible() const { return datum_.irreducible(); }
  int rank() const { return datum_.rank; }

  void diag(const std::string& msg) {
    std::lock_guard<std::mutex> lk(err_mu_);
    err_ << msg << "\n";
  }

  std::shared_ptr<const Group> group() {
    return memo<Group>("group", [&] {
      auto g = Group::build(datum_);
      store("group-" + file_label(label()) + ".json", group_json(*g, g->order() <= 5000));
      return g;
    });
  }
  std::shared_ptr<const IntersectionLattice> lattice() {
    return memo<IntersectionLattice>("lattice", [&] {
      // The lattice keeps a raw pointer; the memoized group outlives it.
      return std::make_shared<IntersectionLattice>(*group());
    });
  }
  std::shared_ptr<const NoncrossingLattice> nc() {
    return memo<NoncrossingLattice>("nc", [&] { return std::make_shared<NoncrossingLattice>(group()); });
  }
  std::shared_ptr<const ClusterComplex> delta(int m) {
    return memo<ClusterComplex>("delta" + std::to_string(m), [&] { return std::make_shared<ClusterComplex>(nc(), m); });
  }
  std::shared_ptr<const ParkingPoset> pf() {
    return memo<ParkingPoset>("pf", [&] { return std::make_shared<ParkingPoset>(nc()); });
  }
  std::shared_ptr<const CpfComplex> cpf(int m, bool positive) {
    return memo<CpfComplex>("cpf" + std::to_string(m) + (positive ? "+" : ""),
                            [&] { return std::make_shared<CpfComplex>(delta(m), positive); });
  }
  std::shared_ptr<const CatalanRegions> regions(int m) {
    return memo<CatalanRegions>("regions" + std::to_string(m),
                                [&] { return std::make_shared<CatalanRegions>(group(), m); });
  }

  std::shared_ptr<const HomologyProfile> cpf_homology(int m, bool positive) {
    return memo<HomologyProfile>("hom" + std::to_string(m) + (positive ? "+" : ""), [&] {
      const auto& c = cpf(m, positive)->complex();
      const std::string name =
          "cpf-" + file_label(label()) + "-m" + std::to_string(m) + (positive ? "-plus" : "") + ".json";
      const std::string fp = std::to_string(fingerprint(c));
      if (auto j = load(name); j && j->value("fingerprint", "") == fp && (*j)["f_vector"] == Json(c.f_vector())) {
        diag("cache: reusing homology from " + name);
        return std::make_shared<HomologyProfile>(homology_from_json((*j)["homology"]));
      }
      auto h = std::make_shared<HomologyProfile>(homology(c));
      Json out = to_json(c);
      out["fingerprint"] = fp;
      out["homology"] = to_json(*h);
      store(name, out);
      return h;
    });
  }

  const std::vector<Component>& components() {
    return *memo<std::vector<Component>>("components", [&] {
      auto out = std::make_shared<std::vector<Component>>();
      for (const auto& idx : datum_.components()) {
        IntMatrix sub(idx.size(), std::vector<int>(idx.size()));
        for (std::size_t a = 0; a < idx.size(); ++a)
          for (std::size_t b = 0; b < idx.size(); ++b) sub[a][b] = datum_.matrix[idx[a]][idx[b]];
        auto g = Group::build(CoxeterDatum::from_matrix(sub));
        IntersectionLattice l(*g);
        out->push_back({g->rank(), g->roots().coxeter_number(), os_exponents(l, l.whole())});
      }
      return out;
    });
  }

  // prod over components and exponents of (mh + e + 1 + shift) / (e + 1); shift 0 or -2.
  BigInt fuss(int m, bool positive) {
    BigInt num = 1, den = 1;
    for (const auto& c : components())
      for (long long e : c.exponents) {
        num *= BigInt(static_cast<long>(m * c.h + e + (positive ? -1 : 1)));
        den *= BigInt(static_cast<long>(e + 1));
      }
    return num / den;
  }
  // prod over components of (mh +- 1)^rank.
  BigInt power(int m, bool positive) {
    BigInt r = 1;
    for (const auto& c : components()) r *= ipow(BigInt(static_cast<long>(m) * c.h + (positive ? -1 : 1)), c.rank);
    return r;
  }

 private:
  struct Slot {
    std::once_flag once;
    std::shared_ptr<const void> value;
  };

  template <class T, class F>
  std::shared_ptr<const T> memo(const std::string& key, F make) {
    std::shared_ptr<Slot> s;
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto& p = slots_[key];
      if (!p) p = std::make_shared<Slot>();
      s = p;
    }
    std::call_once(s->once, [&] { s->value = std::shared_ptr<const T>(make()); });
    return std::static_pointer_cast<const T>(s->value);
  }

  std::optional<Json> load(const std::string& name) {
    if (cfg_.cache.empty()) return std::nullopt;
    std::ifstream in(fs::path(cfg_.cache) / name);
    if (!in) return std::nullopt;
    try {
      return Json::parse(in);
    } catch (const std::exception&) {
      diag("cache: ignoring unreadable " + name);
      return std::nullopt;
    }
  }
  void store(const std::string& name, const Json& j) {
    if (cfg_.cache.empty()) return;
    std::error_code ec;
    fs::create_directories(cfg_.cache, ec);
    const fs::path tmp = fs::path(cfg_.cache) / (name + ".tmp");
    {
      std::ofstream o(tmp);
      o << j.dump() << "\n";
      if (!o) {
        diag("cache: cannot write " + tmp.string());
        return;
      }
    }
    fs::rename(tmp, fs::path(cfg_.cache) / name, ec);
    if (ec) diag("cache: " + ec.message());
  }

  Config cfg_;
  std::ostream& err_;
  std::mutex err_mu_, mu_;
  CoxeterDatum datum_;
  std::map<std::string, std::shared_ptr<Slot>> slots_;
};

SuiteReport make_report(Context& ctx, std::string suite, int m, bool positive) {
  SuiteReport r;
  r.suite = std::move(suite);
  r.group = ctx.label();
  r.m = m;
  r.positive = positive;
  return r;
}

bool is_type_a(Context& ctx) { return ctx.irreducible() && classify(ctx.datum().matrix)[0] == 'A'; }

void require_irreducible(Context& ctx, const std::string& verb) {
  if (!ctx.irreducible()) throw ConfigError(verb + " needs an irreducible group, got " + ctx.label());
}

// ---- verbs ----

SuiteReport group_info(Context& ctx) {
  auto r = make_report(ctx, "group info", ctx.cfg().m, false);
  r.add_data([&](Json& d) {
    auto g = ctx.group();
    d["group"] = group_json(*g, false);
    std::vector<long long> e;
    for (const auto& c : ctx.components()) e.insert(e.end(), c.exponents.begin(), c.exponents.end());
    std::sort(e.begin(), e.end());
    d["exponents"] = e;
  });
  r.add("order = product of degrees", [&] {
    BigInt p = 1;
    for (const auto& c : ctx.components())
      for (long long e : c.exponents) p *= BigInt(static_cast<long>(e + 1));
    return equal(to_json(p), ctx.group()->order());
  });
  r.add("positive roots = sum of exponents", [&] {
    long long s = 0;
    for (const auto& c : ctx.components())
      for (long long e : c.exponents) s += e;
    return equal(s, ctx.group()->roots().num_positive());
  });
  r.add("length of longest element", [&] {
    auto g = ctx.group();
    return equal(g->roots().num_positive(), g->coxeter_length(g->longest()));
  });
  r.add("reflections", [&] {
    auto g = ctx.group();
    return equal(g->roots().num_positive(), g->reflections().size());
  });
  return r;
}

SuiteReport nc_build(Context& ctx) {
  auto r = make_report(ctx, "nc build", 1, false);
  r.add_data([&](Json& d) { d["nc"] = nc_json(*ctx.nc()); });
  r.add("size = Cat(W)", [&] { return equal(to_json(ctx.fuss(1, false)), ctx.nc()->size()); });
  r.add("prime elements = Cat+(W)", [&] {
    auto nc = ctx.nc();
    std::size_t k = 0;
    for (std::size_t i = 0; i < nc->size(); ++i) k += nc->is_prime(static_cast<int>(i));
    return equal(to_json(ctx.fuss(1, true)), k);
  });
  r.add("rank sizes = h(cluster complex)", [&] {
    auto nc = ctx.nc();
    std::vector<long long> ranks(ctx.rank() + 1, 0);
    for (std::size_t i = 0; i < nc->size(); ++i) ++ranks[nc->rank(static_cast<int>(i))];
    return equal(h_vector(ctx.delta(1)->complex()), ranks);
  });
  r.add("join agrees with scan", [&] {
    auto nc = ctx.nc();
    long bad = 0;
    const int n = static_cast<int>(nc->size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        auto j = nc->join_by_scan(a, b);
        if (!j || *j != nc->join(a, b)) ++bad;
      }
    return equal(0, bad);
  });
  r.add("Kreweras anti-automorphism", [&] {
    auto nc = ctx.nc();
    long bad = 0;
    const int n = static_cast<int>(nc->size());
    std::vector<char> hit(n, 0);
    for (int a = 0; a < n; ++a) {
      const int k = nc->kreweras(a);
      hit[k] = 1;
      if (nc->rank(k) != ctx.rank() - nc->rank(a)) ++bad;
      for (int b = 0; b < n; ++b)
        if (nc->leq(a, b) && !nc->leq(nc->kreweras(b), k)) ++bad;
    }
    bad += std::count(hit.begin(), hit.end(), 0);
    return equal(0, bad);
  });
  return r;
}

SuiteReport cluster_build(Context& ctx) {
  const int m = ctx.cfg().m;
  auto r = make_report(ctx, "cluster build", m, false);
  r.add_data([&ctx, m](Json& d) {
    auto dl = ctx.delta(m);
    d["h_vector"] = h_vector(dl->complex());
    d["cluster"] = cluster_json(*dl);
  });
  r.add("facets = Cat^(m)(W)", [&ctx, m] {
    const auto& c = ctx.delta(m)->complex();
    return equal(to_json(ctx.fuss(m, false)), c.count_of_size(ctx.rank()));
  });
  r.add("positive facets = Cat^(m)+(W)", [&ctx, m] {
    auto p = ctx.delta(m)->positive();
    return equal(to_json(ctx.fuss(m, true)), p.count_of_size(ctx.rank()));
  });
  r.add("pure", [&ctx, m] { return equal(true, ctx.delta(m)->complex().is_pure()); });
  if (m >= 1)
    r.add("rotation preserves compatibility", [&ctx, m] {
      auto dl = ctx.delta(m);
      long bad = 0;
      const int n = static_cast<int>(dl->num_vertices());
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (dl->compatible(u, v) != dl->compatible(dl->rotate(u), dl->rotate(v))) ++bad;
      return equal(0, bad);
    });
  r.add("links are parabolic complexes", [&ctx, m] {
    auto dl = ctx.delta(m);
    const auto& c = dl->complex();
    long bad = 0, total = 0;
    Outcome o;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(c.dimension() + 1); ++k)
      for (const auto& f : c.faces_of_size(k)) {
        ++total;
        auto lc = link_fvector_check(*dl, f);
        if (!lc.passed() && bad++ == 0) o.note = "first failure at a face of size " + std::to_string(k);
      }
    o.pass = bad == 0;
    o.expected = {{"faces", total}, {"failures", 0}};
    o.actual = {{"faces", total}, {"failures", bad}};
    return o;
  });
  return r;
}

SuiteReport cluster_types(Context& ctx) {
  require_irreducible(ctx, "cluster types");
  const int m = ctx.cfg().m;
  const bool pos = ctx.cfg().positive;
  auto r = make_report(ctx, "cluster types", m, pos);
  auto rows = std::make_shared<std::vector<OrbitCountRow>>();
  auto once = std::make_shared<std::once_flag>();
  auto get = [&ctx, m, pos, rows, once] {
    std::call_once(*once, [&] { *rows = orbit_type_counts(*ctx.delta(m), *ctx.lattice(), pos); });
    return rows;
  };
  r.add("faces by flat orbit", [get] {
    Json e = Json::array(), a = Json::array();
    for (const auto& row : *get()) {
      e.push_back({{"type", row.type}, {"count", to_json(row.expected)}});
      a.push_back({{"type", row.type}, {"count", to_json(row.actual)}});
    }
    return equal(e, a);
  });
  return r;
}

SuiteReport pf_topology(Context& ctx) {
  auto r = make_report(ctx, "pf topology", 1, false);
  r.add_data([&](Json& d) {
    auto pf = ctx.pf();
    std::vector<long long> ranks(ctx.rank() + 1, 0);
    for (std::size_t i = 0; i < pf->size(); ++i) ++ranks[pf->rank(static_cast<int>(i))];
    d["size"] = pf->size();
    d["rank_sizes"] = ranks;
    d["whitney"] = whitney_numbers(*pf);
  });
  r.add("size = (h+1)^n", [&] { return equal(to_json(ctx.power(1, false)), ctx.pf()->size()); });
  r.add("proper part homology", [&] {
    Json e = Json::object();
    e[std::to_string(ctx.rank() - 1)] = {{"rank", to_json(ctx.power(1, true))}, {"torsion", Json::array()}};
    return equal(e, to_json(pf_top_homology(*ctx.pf())));
  });
  r.add("Cohen-Macaulay (homology)", [&] {
    auto rep = homology_cm_check(ctx.pf()->poset());
    Outcome o;
    o.pass = rep.passed();
    o.expected = {{"intervals", rep.intervals_checked}, {"violations", 0}};
    o.actual = {{"intervals", rep.intervals_checked}, {"violations", rep.violations.size()}};
    if (!rep.passed()) o.note = rep.violations.front().detail;
    return o;
  });
  r.add("intervals [W, {w}] are NC", [&] {
    auto pf = ctx.pf();
    long bad = 0;
    for (ElementId w = 0; w < static_cast<ElementId>(pf->group().order()); ++w) bad += !pf_interval_iso_check(*pf, w).passed;
    return equal(0, bad);
  });
  r.add("filters are parabolic PF", [&] {
    auto pf = ctx.pf();
    long bad = 0;
    for (std::size_t x = 0; x < pf->size(); ++x) bad += !pf_filter_iso_check(*pf, static_cast<int>(x)).passed;
    return equal(0, bad);
  });
  if (ctx.irreducible())
    for (int m = 1; m <= 3; ++m)
      r.add("multichains m=" + std::to_string(m) + " = Park_m", [&ctx, m] {
      auto pf = ctx.pf();
      const Group& g = pf->group();
      Json e = Json::array(), a = Json::array();
      for (ElementId w = 0; w < static_cast<ElementId>(g.order()); ++w) {
        e.push_back(to_json(park_char(g, m, w, false)));
        a.push_back(to_json(multichain_count(pf->poset(), m, pf->action(w))));
      }
      Outcome o = equal(e, a);
      if (o.pass) {
        // The per-element lists are long; keep the record compact.
        o.expected = o.actual = {{"elements", g.order()}};
      }
      return o;
    });
  return r;
}

SuiteReport pf_helly(Context& ctx) {
  auto r = make_report(ctx, "pf helly", 1, false);
  r.add_report_only("Helly property, rank 1", [&] {
    auto rep = helly_report(*ctx.pf());
    Outcome o;
    o.pass = rep.holds;
    o.expected = {{"holds", true}};
    o.actual = {{"holds", rep.holds}, {"families", rep.families_checked}, {"exhaustive", rep.exhaustive}};
    if (!rep.holds) o.actual["counterexample"] = rep.counterexample;
    return o;
  });
  return r;
}

SuiteReport pf_labeled_clusters(Context& ctx) {
  auto r = make_report(ctx, "pf labeled-clusters", 1, false);
  r.add("#LC = (h+1)^n", [&] { return equal(to_json(ctx.power(1, false)), labeled_clusters(*ctx.delta(1), false).size()); });
  r.add("#LC+ = (h-1)^n", [&] { return equal(to_json(ctx.power(1, true)), labeled_clusters(*ctx.delta(1), true).size()); });
  r.add("labeled clusters vs PF", [&] {
    auto rep = labeled_cluster_bijection_check(*ctx.delta(1), *ctx.pf());
    Outcome o;
    o.pass = rep.passed();
    o.expected = {{"lc", rep.pf}, {"violations", 0}};
    o.actual = {{"lc", rep.lc}, {"violations", rep.violations}};
    o.note = std::to_string(rep.parabolic_meets) + " pairs meet W_{prod f+} in a left inversion";
    return o;
  });
  return r;
}

SuiteReport cpf_verify(Context& ctx) {
  const int m = ctx.cfg().m;
  const bool pos = ctx.cfg().positive;
  auto r = make_report(ctx, "cpf verify", m, pos);
  r.add_data([&ctx, m, pos](Json& d) {
    const auto& c = ctx.cpf(m, pos)->complex();
    d["f_vector"] = c.f_vector();
    if (c.is_pure()) d["h_vector"] = h_vector(c);
  });
  r.add("homology", [&ctx, m, pos] {
    Json e = Json::object();
    const BigInt rank = ctx.power(m, pos);
    if (rank != 0) e[std::to_string(ctx.rank() - 1)] = {{"rank", to_json(rank)}, {"torsion", Json::array()}};
    return equal(e, to_json(*ctx.cpf_homology(m, pos)));
  });
  r.add("faces counted by orbits", [&ctx, m, pos] {
    return equal(orbit_face_counts(*ctx.delta(m), pos), ctx.cpf(m, pos)->complex().f_vector());
  });
  if (m == 0 && !pos)
    r.add("m=0 is the Coxeter complex", [&ctx] {
      return equal(coxeter_complex_fvector(*ctx.group()), ctx.cpf(0, false)->complex().f_vector());
    });
  if (pos && m == 1)
    r.add("positive faces vs Whitney numbers", [&ctx, m] {
      auto [f, w] = whitney_check(*ctx.cpf(m, true));
      return equal(w, f);
    });
  const auto comps = ctx.datum().components();
  if (comps.size() == 2 && !pos) {
    r.add("join of factors", [&ctx, m, comps] {
      auto sub = [&](const std::vector<int>& idx) {
        IntMatrix mm(idx.size(), std::vector<int>(idx.size()));
        for (std::size_t a = 0; a < idx.size(); ++a)
          for (std::size_t b = 0; b < idx.size(); ++b) mm[a][b] = ctx.datum().matrix[idx[a]][idx[b]];
        return CoxeterDatum::from_matrix(mm);
      };
      auto j = cpf_join_check(sub(comps[0]), sub(comps[1]), m);
      return equal(j.expected, j.actual);
    });
  }
  return r;
}

SuiteReport cpf_lefschetz(Context& ctx) {
  require_irreducible(ctx, "cpf lefschetz");
  const int m = ctx.cfg().m;
  const bool pos = ctx.cfg().positive;
  auto r = make_report(ctx, "cpf lefschetz", m, pos);
  auto g = ctx.group();
  for (ElementId w = 0; w < static_cast<ElementId>(g->order()); ++w)
    r.add("w=" + word_label(*g, w), [&ctx, m, pos, w] {
      auto res = lefschetz(*ctx.cpf(m, pos), w);
      return equal({{"signed_count", res.predicted}, {"fixed_euler", res.predicted}},
                   {{"signed_count", res.signed_count}, {"fixed_euler", res.fixed_euler}});
    });
  return r;
}

SuiteReport cpf_links(Context& ctx) {
  const int m = ctx.cfg().m;
  if (ctx.cfg().positive) throw ConfigError("cpf links applies to the full complex");
  auto r = make_report(ctx, "cpf links", m, false);
  // Face sizes are known only after the build; dimension is at most n-1.
  for (int k = 1; k <= ctx.rank(); ++k)
    r.add("links of faces with " + std::to_string(k) + " vertices", [&ctx, m, k] {
      auto c = ctx.cpf(m, false);
      const auto& cx = c->complex();
      long bad = 0, total = 0;
      Outcome o;
      if (static_cast<std::size_t>(k) <= static_cast<std::size_t>(cx.dimension() + 1))
        for (const auto& f : cx.faces_of_size(k)) {
          ++total;
          auto lc = cpf_link_check(*c, f);
          if (!lc.passed() && bad++ == 0) o.note = lc.detail;
        }
      o.pass = bad == 0;
      o.expected = {{"faces", total}, {"failures", 0}};
      o.actual = {{"faces", total}, {"failures", bad}};
      return o;
    });
  return r;
}

SuiteReport cpf_flag(Context& ctx) {
  const int m = ctx.cfg().m;
  const bool pos = ctx.cfg().positive;
  auto r = make_report(ctx, "cpf flag", m, pos);
  r.add_report_only("flag complex", [&ctx, m, pos] {
    auto rep = flag_report(ctx.cpf(m, pos)->complex());
    Outcome o;
    o.pass = rep.flag;
    o.expected = {{"flag", true}};
    o.actual = {{"flag", rep.flag}, {"cliques", rep.cliques_checked}};
    if (!rep.flag) o.actual["missing"] = rep.missing;
    return o;
  });
  return r;
}

SuiteReport hvector_compare(Context& ctx) {
  require_irreducible(ctx, "hvector compare");
  const int m = ctx.cfg().m;
  const bool pos = ctx.cfg().positive;
  const int n = ctx.rank();
  auto r = make_report(ctx, "hvector compare", m, pos);
  r.add("f-polynomial formula", [&ctx, m, pos] {
    return equal(to_json(f_poly_formula(*ctx.lattice(), m, pos)), poly_json(ctx.cpf(m, pos)->complex().f_vector()));
  });
  r.add("h-polynomial formula", [&ctx, m, pos, n] {
    auto h = f_to_h_poly(f_polynomial(ctx.cpf(m, pos)->complex().f_vector()), n);
    return equal(to_json(h_poly_formula(*ctx.lattice(), m, pos)), to_json(h));
  });
  r.add("top h-entry = (mh+-1)^n", [&ctx, m, pos, n] {
    auto h = f_to_h_poly(f_polynomial(ctx.cpf(m, pos)->complex().f_vector()), n);
    return equal(to_json(ctx.power(m, pos)), to_json(h[n]));
  });
  r.add("Kung identity", [&ctx] {
    auto p = intersection_poset(*ctx.lattice());
    long samples = 0, bad = 0;
    for (std::size_t x = 0; x < p.size(); ++x) {
      auto k = kung_identity_check(p, static_cast<int>(x));
      samples += static_cast<long>(k.samples);
      bad += static_cast<long>(k.mismatches);
    }
    return equal({{"samples", samples}, {"mismatches", 0}}, {{"samples", samples}, {"mismatches", bad}});
  });
  r.add("Kung product at t=0..3", [&ctx] {
    Json a = Json::array();
    for (long t = 0; t <= 3; ++t) a.push_back(kung_product_failures(*ctx.lattice(), t).size());
    return equal(Json::array({0, 0, 0, 0}), a);
  });
  if (is_type_a(ctx) && m == 1 && !pos)
    r.add("quasi-Stirling = z h(CPF)", [&ctx, n] {
      auto h = f_to_h_poly(f_polynomial(ctx.cpf(1, false)->complex().f_vector()), n);
      return equal(to_json(quasi_stirling(n + 1)), to_json(Polynomial::monomial(1, 1) * h));
    });
  return r;
}

SuiteReport catalan_verify(Context& ctx) {
  if (!ctx.datum().crystallographic()) throw ConfigError("catalan verify needs a crystallographic group, got " + ctx.label());
  const int m = ctx.cfg().m;
  auto r = make_report(ctx, "catalan verify", m, false);
  r.add_data([&ctx, m](Json& d) {
    auto reg = ctx.regions(m);
    d["regions"] = reg->size();
    d["dominant"] = reg->dominant().size();
    d["mfl_all"] = to_json(reg->mfl_polynomial(false));
    d["mfl_dominant"] = to_json(reg->mfl_polynomial(true));
  });
  r.add("regions = |W| Cat^(m)(W)", [&ctx, m] {
    return equal(to_json(BigInt(ctx.fuss(m, false) * static_cast<long>(ctx.group()->order()))), ctx.regions(m)->size());
  });
  r.add("Zaslavsky count", [&ctx, m] {
    auto reg = ctx.regions(m);
    return equal(to_json(zaslavsky_regions(intersection_poset(reg->arrangement().arrangement()))), reg->size());
  });
  r.add("dominant regions = Cat^(m)(W)", [&ctx, m] { return equal(to_json(ctx.fuss(m, false)), ctx.regions(m)->dominant().size()); });
  r.add("wall flips", [&ctx, m] { return equal(0, closure_violations(*ctx.regions(m))); });
  if (m >= 1) {
    r.add("dominant mfl = h(Delta^(m))", [&ctx, m] {
      auto id = dominant_mfl_identity(*ctx.regions(m), *ctx.delta(m));
      return equal(to_json(id.lhs), to_json(id.rhs));
    });
    r.add("mfl over all regions = h(CPF^(m))", [&ctx, m] {
      auto h = f_to_h_poly(f_polynomial(ctx.cpf(m, false)->complex().f_vector()), ctx.rank());
      auto id = all_mfl_identity(*ctx.regions(m), h);
      return equal(to_json(id.lhs), to_json(id.rhs));
    });
    r.add("orbit lemma on dominant regions", [&ctx, m] {
      auto reg = ctx.regions(m);
      Json bad = Json::array();
      for (int d : reg->dominant())
        if (!orbit_lemma_check(*reg, d).passed()) bad.push_back(d);
      return equal({{"regions", reg->dominant().size()}, {"failures", Json::array()}},
                   {{"regions", reg->dominant().size()}, {"failures", bad}});
    });
  }
  return r;
}

SuiteReport oracle_typea(Context& ctx) {
  if (!is_type_a(ctx)) throw ConfigError("oracle typea needs a type A group, got " + ctx.label());
  const int m = ctx.cfg().m;
  if (m < 1) throw ConfigError("oracle typea needs --m >= 1");
  const int n = ctx.rank() + 1;
  auto r = make_report(ctx, "oracle typea", m, false);
  auto signed_k = [n, m](bool prime, int shift) {
    TypeCounts out;
    for (const auto& l : partitions(n)) {
      BigInt k = k_formula(n, -m, l, prime);
      if ((static_cast<int>(l.size()) + shift) % 2) k = -k;
      out[l] = k;
    }
    return counts_json(out);
  };
  r.add_data([&ctx, m](Json& d) {
    d["face_types"] = counts_json(cluster_type_counts(*ctx.delta(m), false));
    d["positive_face_types"] = counts_json(cluster_type_counts(*ctx.delta(m), true));
  });
  r.add_report_only("face types vs (-1)^l K'_{-m}", [&ctx, m, signed_k] {
    Outcome o = equal(signed_k(true, 0), counts_json(cluster_type_counts(*ctx.delta(m), false)));
    if (!o.pass) o.note = "differs from the face counts by an overall sign; see the next check";
    return o;
  });
  r.add("face types vs (-1)^(l-1) K'_{-m}", [&ctx, m, signed_k] {
    return equal(signed_k(true, 1), counts_json(cluster_type_counts(*ctx.delta(m), false)));
  });
  r.add("positive face types vs (-1)^(l-1) K_{-m}", [&ctx, m, signed_k] {
    return equal(signed_k(false, 1), counts_json(cluster_type_counts(*ctx.delta(m), true)));
  });
  r.add("dissections by type", [&ctx, n, m] {
    return equal(counts_json(cluster_type_counts(*ctx.delta(m), false)), counts_json(count_dissections_by_type(n, m)));
  });
  for (bool prime : {false, true})
    r.add(std::string("Dyck paths vs ") + (prime ? "K'" : "K"), [n, m, prime] {
      TypeCounts e;
      for (const auto& l : partitions(n)) e[l] = k_formula(n, m, l, prime);
      return equal(counts_json(e), counts_json(count_dyck_by_type(n, m, prime)));
    });
  r.add("labeled dissections vs CPF", [&ctx, n, m] {
    return equal(ctx.cpf(m, false)->complex().f_vector(), labeled_dissection_complex(n, m).f_vector());
  });
  for (bool prime : {false, true})
    r.add(std::string("parking functions = (mn") + (prime ? "-" : "+") + "1)^(n-1)", [n, m, prime] {
      return equal(to_json(ipow(BigInt(static_cast<long>(m) * n + (prime ? -1 : 1)), n - 1)),
                   to_json(classical_parking_count(n, m, prime)));
    });
  return r;
}

using Verb = SuiteReport (*)(Context&);

struct VerbEntry {
  std::string group, name;
  Verb fn;
};

const std::vector<VerbEntry>& verbs() {
  static const std::vector<VerbEntry> v = {
      {"group", "info", group_info},
      {"nc", "build", nc_build},
      {"cluster", "build", cluster_build},
      {"cluster", "types", cluster_types},
      {"pf", "topology", pf_topology},
      {"pf", "helly", pf_helly},
      {"pf", "labeled-clusters", pf_labeled_clusters},
      {"cpf", "verify", cpf_verify},
      {"cpf", "lefschetz", cpf_lefschetz},
      {"cpf", "links", cpf_links},
      {"cpf", "flag", cpf_flag},
      {"hvector", "compare", hvector_compare},
      {"catalan", "verify", catalan_verify},
      {"oracle", "typea", oracle_typea},
  };
  return v;
}

int emit(const Config& cfg, const std::vector<SuiteReport>& reports, const Json& skipped, bool all, std::ostream& out) {
  bool pass = true;
  Json rs = Json::array();
  for (const auto& r : reports) {
    pass = pass && r.passed();
    rs.push_back(report_json(r, cfg.timings));
  }
  if (cfg.out == "json") {
    if (all) {
      Json j = {{"schema", 1}, {"suite", "all"}, {"group", reports.empty() ? cfg.type : reports.front().group},
                {"m", cfg.m}, {"positive", cfg.positive}, {"passed", pass}, {"skipped", skipped}, {"reports", rs}};
      out << j.dump(2) << "\n";
    } else {
      out << rs.front().dump(2) << "\n";
    }
  } else {
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (i) out << "\n";
      render_text(out, rs[i]);
    }
    for (const auto& s : skipped) out << "\nskipped " << s["suite"].get<std::string>() << ": " << s["reason"].get<std::string>() << "\n";
    if (all) out << "\n" << (pass ? "ALL PASS" : "FAILURES") << "\n";
  }
  return pass ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coxeter-Catalan combinatorics checks", "coxcat"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--type", cfg.type, "Coxeter type label, e.g. A3, B2, I2(7), A1xA2")->required();
  app.add_option("--m", cfg.m, "Fuss parameter")->check(CLI::NonNegativeNumber);
  app.add_flag("--positive", cfg.positive, "use the positive part");
  app.add_option("--out", cfg.out, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache", cfg.cache, "directory for serialized groups and complexes");
  app.add_flag("--timings", cfg.timings, "include per-check runtimes (output is then not reproducible)");

  std::string chosen_group, chosen_name;
  std::map<std::string, CLI::App*> groups;
  for (const auto& v : verbs()) {
    auto*& g = groups[v.group];
    if (!g) {
      g = app.add_subcommand(v.group);
      g->require_subcommand(1);
      g->fallthrough();
    }
    g->add_subcommand(v.name)->callback([&chosen_group, &chosen_name, v] {
      chosen_group = v.group;
      chosen_name = v.name;
    });
  }
  app.add_subcommand("suite", "run every applicable check")
      ->require_subcommand(1)
      ->fallthrough()
      ->add_subcommand("all")
      ->callback([&] { chosen_group = "suite", chosen_name = "all"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "coxcat: " << e.what() << "\n";
    return 2;
  }

  try {
    Context ctx(cfg, err);
    std::vector<SuiteReport> reports;
    Json skipped = Json::array();
    const bool all = chosen_group == "suite";
    for (const auto& v : verbs()) {
      if (!all && (v.group != chosen_group || v.name != chosen_name)) continue;
      try {
        reports.push_back(v.fn(ctx));
      } catch (const ConfigError& e) {
        if (!all) throw;
        skipped.push_back({{"suite", v.group + " " + v.name}, {"reason", e.what()}});
      }
    }
    run_reports(reports, cfg.jobs);
    return emit(cfg, reports, skipped, all, out);
  } catch (const ConfigError& e) {
    err << "coxcat: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    // Errors while reading the configuration (bad labels, unsupported data).
    err << "coxcat: " << e.what() << "\n";
    return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"coxcat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace coxcat::cli
