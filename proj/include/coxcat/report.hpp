#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "coxcat/serialize.hpp"

namespace coxcat {

enum class CheckStatus { Pass, Fail, ReportOnly };
std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  Json expected, actual;
  std::string note;
  double ms = 0;
};

// What a check body returns; the runner fills in name, timing and status.
struct Outcome {
  bool pass = true;
  Json expected, actual;
  std::string note;
};

struct Check {
  std::string name;
  bool report_only = false;
  std::function<Outcome()> body;
};

struct SuiteReport {
  std::string suite, group;
  int m = 0;
  bool positive = false;
  std::vector<Check> pending;  // consumed by run_reports
  std::vector<CheckRecord> checks;
  Json data = Json::object();
  std::vector<std::function<void(Json&)>> data_fillers;

  void add(std::string name, std::function<Outcome()> body) {
    pending.push_back({std::move(name), false, std::move(body)});
  }
  void add_report_only(std::string name, std::function<Outcome()> body) {
    pending.push_back({std::move(name), true, std::move(body)});
  }
  // Data sections are filled on the pool too and assembled in insertion order.
  void add_data(std::function<void(Json&)> fill) { data_fillers.push_back(std::move(fill)); }
  bool passed() const;
};

// Runs every pending check and data filler of every report on `jobs` threads.
// An exception inside a check turns it into a failure naming the error kind.
void run_reports(std::vector<SuiteReport>& reports, int jobs);

Json report_json(const SuiteReport& r, bool timings);
void render_text(std::ostream& os, const Json& report);

}  // namespace coxcat
