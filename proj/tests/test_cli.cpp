#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "coxcat/cli.hpp"
#include "coxcat/errors.hpp"
#include "coxcat/report.hpp"
#include "coxcat/serialize.hpp"
#include "doctest.h"

using namespace coxcat;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const Json* find_check(const Json& report, const std::string& name) {
  for (const auto& c : report["checks"])
    if (c["name"] == name) return &c;
  return nullptr;
}

}  // namespace

TEST_SUITE("cli_harness") {
  TEST_CASE("documented invocations") {
    auto r = run({"cpf", "verify", "--type", "A2", "--m", "1", "--out", "json"});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["suite"] == "cpf verify");
    const Json* h = find_check(j, "homology");
    REQUIRE(h);
    CHECK((*h)["actual"]["1"]["rank"] == 16);
    CHECK((*h)["status"] == "pass");

    auto p = run({"pf", "topology", "--type", "B2", "--out", "json"});
    REQUIRE(p.code == 0);
    auto pj = Json::parse(p.out);
    const Json* ph = find_check(pj, "proper part homology");
    REQUIRE(ph);
    CHECK((*ph)["actual"] == Json::parse(R"({"1":{"rank":9,"torsion":[]}})"));

    auto c = run({"catalan", "verify", "--type", "A2", "--m", "1", "--out", "json"});
    REQUIRE(c.code == 0);
    auto cj = Json::parse(c.out);
    const Json* thm = find_check(cj, "mfl over all regions = h(CPF^(m))");
    REQUIRE(thm);
    CHECK((*thm)["status"] == "pass");
    CHECK((*thm)["actual"] == Json::array({1, 13, 16}));
  }

  TEST_CASE("text output") {
    auto r = run({"pf", "topology", "--type", "B2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS  proper part homology") != std::string::npos);
    CHECK(r.out.find("\"rank\":9") != std::string::npos);
    CHECK(r.err.empty());
  }

  TEST_CASE("usage and configuration errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"cpf", "verify"}).code == 2);  // --type missing
    CHECK(run({"cpf", "--type", "A2"}).code == 2);
    CHECK(run({"cpf", "explode", "--type", "A2"}).code == 2);
    CHECK(run({"cpf", "verify", "--type", "A2", "--out", "xml"}).code == 2);
    CHECK(run({"cpf", "verify", "--type", "A2", "--m", "-1"}).code == 2);
    CHECK(run({"cpf", "verify", "--type", "A2", "--jobs", "0"}).code == 2);
    auto bad = run({"group", "info", "--type", "Q7"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("ParseError") != std::string::npos);
    CHECK(bad.out.empty());
    CHECK(run({"catalan", "verify", "--type", "H3"}).code == 2);
    CHECK(run({"oracle", "typea", "--type", "B2"}).code == 2);
    CHECK(run({"oracle", "typea", "--type", "A2", "--m", "0"}).code == 2);
    CHECK(run({"cpf", "lefschetz", "--type", "A1xA1"}).code == 2);
    CHECK(run({"cpf", "links", "--type", "A2", "--positive"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("suite all is reproducible across job counts") {
    auto a = run({"suite", "all", "--type", "A2", "--m", "1", "--out", "json", "--jobs", "1"});
    auto b = run({"suite", "all", "--type", "A2", "--m", "1", "--out", "json", "--jobs", "4"});
    auto c = run({"suite", "all", "--type", "A2", "--m", "1", "--out", "json", "--jobs", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
    auto t1 = run({"suite", "all", "--type", "B2", "--m", "2", "--jobs", "1"});
    auto t3 = run({"suite", "all", "--type", "B2", "--m", "2", "--jobs", "3"});
    CHECK(t1.code == 0);
    CHECK(t1.out == t3.out);
    CHECK(t1.out.find("ALL PASS") != std::string::npos);

    auto j = Json::parse(a.out);
    CHECK(j["passed"] == true);
    std::vector<std::string> suites;
    for (const auto& r : j["reports"]) suites.push_back(r["suite"]);
    CHECK(suites.front() == "group info");
    CHECK(std::find(suites.begin(), suites.end(), "oracle typea") != suites.end());
    // Runtimes only appear on request.
    CHECK(a.out.find("\"ms\"") == std::string::npos);
    auto timed = run({"group", "info", "--type", "A2", "--out", "json", "--timings"});
    CHECK(timed.out.find("\"ms\"") != std::string::npos);
  }

  TEST_CASE("suite all skips what does not apply") {
    auto r = run({"suite", "all", "--type", "I2(5)", "--m", "1", "--out", "json"});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    std::vector<std::string> skipped;
    for (const auto& s : j["skipped"]) skipped.push_back(s["suite"]);
    CHECK(skipped == std::vector<std::string>{"catalan verify", "oracle typea"});
  }

  TEST_CASE("cache directory") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "coxcat_cache_test";
    fs::remove_all(dir);
    std::vector<std::string> args{"cpf", "verify", "--type", "B2", "--m", "1", "--out", "json", "--cache", dir.string()};
    auto first = run(args);
    CHECK(first.code == 0);
    CHECK(fs::exists(dir / "group-B2.json"));
    CHECK(fs::exists(dir / "cpf-B2-m1.json"));
    CHECK(first.err.find("reusing") == std::string::npos);
    auto second = run(args);
    CHECK(second.out == first.out);
    CHECK(second.err.find("reusing") != std::string::npos);

    auto g = Json::parse(std::ifstream(dir / "group-B2.json"));
    CHECK(g["order"] == 8);
    CHECK(g["elements"].size() == 8);

    // A tampered file with the wrong fingerprint is ignored.
    auto c = Json::parse(std::ifstream(dir / "cpf-B2-m1.json"));
    c["fingerprint"] = "0";
    c["homology"] = Json::object();
    std::ofstream(dir / "cpf-B2-m1.json") << c.dump();
    auto third = run(args);
    CHECK(third.out == first.out);
    CHECK(third.err.find("reusing") == std::string::npos);
    fs::remove_all(dir);
  }

  TEST_CASE("report runner") {
    std::vector<SuiteReport> reps(2);
    reps[0].suite = "a";
    reps[0].add("ok", [] { return Outcome{true, 1, 1, ""}; });
    reps[0].add("throws", []() -> Outcome { throw NotPure("synthetic"); });
    reps[0].add_report_only("info", [] { return Outcome{false, 1, 2, "fine"}; });
    reps[1].suite = "b";
    for (int i = 0; i < 20; ++i) reps[1].add("c" + std::to_string(i), [i] { return Outcome{true, i, i, ""}; });
    reps[1].add_data([](Json& d) { d["x"] = 1; });
    reps[1].add_data([](Json& d) { d["y"] = 2; });
    run_reports(reps, 4);
    REQUIRE(reps[0].checks.size() == 3);
    CHECK(reps[0].checks[0].status == CheckStatus::Pass);
    CHECK(reps[0].checks[1].status == CheckStatus::Fail);
    CHECK(reps[0].checks[1].note.find("NotPure") != std::string::npos);
    CHECK(reps[0].checks[2].status == CheckStatus::ReportOnly);
    CHECK(!reps[0].passed());
    CHECK(reps[1].passed());
    for (int i = 0; i < 20; ++i) CHECK(reps[1].checks[i].name == "c" + std::to_string(i));
    CHECK(reps[1].data.dump() == R"({"x":1,"y":2})");
    auto j = report_json(reps[0], false);
    CHECK(j["summary"]["fail"] == 1);
    CHECK(j["summary"]["report_only"] == 1);
  }

  TEST_CASE("serialization") {
    CHECK(to_json(BigInt(42)) == 42);
    CHECK(to_json(BigInt("123456789012345678901234567890")) == "123456789012345678901234567890");
    CHECK(to_json(Rational(3, 4)) == "3/4");
    CHECK(to_json(Rational(8, 4)) == 2);
    auto g = Group::build(CoxeterDatum::parse("A2"));
    auto j = group_json(*g, true);
    CHECK(j["order"] == 6);
    CHECK(j["roots"].size() == 6);
    CHECK(j["coxeter_number"] == 3);
    CHECK(j["elements"][0] == Json::array({0, 1, 2, 3, 4, 5}));
    auto h = to_json(homology(AbstractComplex::from_facets({{0, 1}, {1, 2}, {0, 2}})));
    CHECK(h == Json::parse(R"({"1":{"rank":1,"torsion":[]}})"));
    auto poly = to_json(Polynomial::from_ints({1, 0, -2}));
    CHECK(poly == Json::array({1, 0, -2}));
  }
}
