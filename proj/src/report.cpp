#include "coxcat/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <thread>

#include "coxcat/errors.hpp"

namespace coxcat {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::ReportOnly: return "report-only";
  }
  return "?";
}

bool SuiteReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == CheckStatus::Fail; });
}

namespace {

CheckRecord execute(const Check& c) {
  CheckRecord rec;
  rec.name = c.name;
  auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = c.body();
    rec.expected = std::move(o.expected);
    rec.actual = std::move(o.actual);
    rec.note = std::move(o.note);
    rec.status = o.pass ? CheckStatus::Pass : CheckStatus::Fail;
  } catch (const Error& e) {
    rec.status = CheckStatus::Fail;
    rec.note = e.what();
  } catch (const std::exception& e) {
    rec.status = CheckStatus::Fail;
    rec.note = std::string("exception: ") + e.what();
  }
  if (c.report_only) rec.status = CheckStatus::ReportOnly;
  rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace

void run_reports(std::vector<SuiteReport>& reports, int jobs) {
  // Flatten into tasks; results land in preallocated slots.
  std::vector<std::function<void()>> tasks;
  std::vector<std::vector<Json>> data(reports.size());
  for (std::size_t r = 0; r < reports.size(); ++r) {
    auto& rep = reports[r];
    rep.checks.assign(rep.pending.size(), {});
    data[r].assign(rep.data_fillers.size(), Json::object());
    for (std::size_t i = 0; i < rep.pending.size(); ++i)
      tasks.push_back([&rep, i] { rep.checks[i] = execute(rep.pending[i]); });
    for (std::size_t i = 0; i < rep.data_fillers.size(); ++i)
      tasks.push_back([&rep, &data, r, i] {
        try {
          rep.data_fillers[i](data[r][i]);
        } catch (const std::exception& e) {
          data[r][i] = {{"error", e.what()}};
        }
      });
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) tasks[t]();
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t r = 0; r < reports.size(); ++r) {
    for (auto& part : data[r])
      for (auto& [k, v] : part.items()) reports[r].data[k] = v;
    reports[r].pending.clear();
    reports[r].data_fillers.clear();
  }
}

Json report_json(const SuiteReport& r, bool timings) {
  Json checks = Json::array();
  std::size_t pass = 0, fail = 0, info = 0;
  for (const auto& c : r.checks) {
    Json j = {{"name", c.name}, {"status", to_string(c.status)}, {"expected", c.expected}, {"actual", c.actual}};
    if (!c.note.empty()) j["note"] = c.note;
    if (timings) j["ms"] = std::round(c.ms * 1000) / 1000;
    checks.push_back(j);
    (c.status == CheckStatus::Pass ? pass : c.status == CheckStatus::Fail ? fail : info)++;
  }
  return {{"schema", 1},
          {"suite", r.suite},
          {"group", r.group},
          {"m", r.m},
          {"positive", r.positive},
          {"passed", r.passed()},
          {"summary", {{"pass", pass}, {"fail", fail}, {"report_only", info}}},
          {"checks", checks},
          {"data", r.data}};
}

namespace {

std::string clip(const Json& j, std::size_t width) {
  if (j.is_null()) return "-";
  std::string s = j.is_string() ? j.get<std::string>() : j.dump();
  if (s.size() > width) s = s.substr(0, width - 3) + "...";
  return s;
}

}  // namespace

void render_text(std::ostream& os, const Json& report) {
  os << report["suite"].get<std::string>() << "  group=" << report["group"].get<std::string>()
     << " m=" << report["m"].get<int>() << (report["positive"].get<bool>() ? " positive" : "") << "\n";
  std::size_t width = 4;
  for (const auto& c : report["checks"]) width = std::max(width, c["name"].get<std::string>().size());
  for (const auto& c : report["checks"]) {
    const std::string st = c["status"].get<std::string>();
    os << "  " << std::left << std::setw(5) << (st == "pass" ? "PASS" : st == "fail" ? "FAIL" : "INFO") << " "
       << std::setw(static_cast<int>(width)) << c["name"].get<std::string>() << "  expected " << clip(c["expected"], 40)
       << "  actual " << clip(c["actual"], 40);
    if (c.contains("ms")) os << "  (" << c["ms"].get<double>() << " ms)";
    os << "\n";
    if (c.contains("note")) os << "        " << c["note"].get<std::string>() << "\n";
  }
  for (const auto& [k, v] : report["data"].items()) {
    const std::string s = v.dump();
    if (s.size() <= 72)
      os << "  " << k << ": " << s << "\n";
    else
      os << "  " << k << ": (" << (v.is_structured() ? v.size() : 1) << " entries, see --out json)\n";
  }
  const auto& s = report["summary"];
  os << "  " << s["pass"].get<std::size_t>() << " pass, " << s["fail"].get<std::size_t>() << " fail, "
     << s["report_only"].get<std::size_t>() << " report-only\n";
}

}  // namespace coxcat
