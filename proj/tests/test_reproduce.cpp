#include <regex>

#include "doctest.h"
#include "ordo/reproduce.hpp"

using namespace ordo::reproduce;

namespace {

const ReportEntry* find(const Report& r, const std::string& claim) {
  for (const auto& e : r.entries)
    if (e.claim == claim) return &e;
  return nullptr;
}

std::string without_volatile_fields(const std::string& json) {
  static const std::regex ts(R"re("timestamp": "[^"]*")re");
  static const std::regex rt(R"re("runtime_seconds": [0-9.e+-]+)re");
  return std::regex_replace(std::regex_replace(json, ts, ""), rt, "");
}

}  // namespace

TEST_CASE("quick run") {
  ReproduceOptions o;
  o.quick = true;
  const auto report = reproduce_all(o);
  CHECK(report.count(Status::Mismatch) == 0);
  CHECK(report.count(Status::Skipped) == 0);
  CHECK(report.exit_code() == 0);
  CHECK(find(report, "enumerated cycles of B(3,3)") == nullptr);
  CHECK(find(report, "rotation seeds B(5,2)") == nullptr);
  REQUIRE(find(report, "rotation seeds B(4,2)") != nullptr);

  const auto* b34 = find(report, "cycle count B(3,4)");
  REQUIRE(b34 != nullptr);
  CHECK(b34->status == Status::FlaggedDiscrepancy);
  CHECK(b34->expected.find("14148730862126934905585664") != std::string::npos);
  CHECK(b34->computed == "12635683568857645056");

  const auto table = format_table(report);
  CHECK(table.find("flagged-discrepancy") != std::string::npos);
  CHECK(table.find("14148730862126934905585664") != std::string::npos);
}

TEST_CASE("full run matches") {
  const auto report = reproduce_all();
  for (const auto& e : report.entries) {
    INFO(e.claim << ": expected " << e.expected << ", computed " << e.computed);
    CHECK(e.status != Status::Mismatch);
    CHECK(e.status != Status::Skipped);
  }
  CHECK(find(report, "rotation seeds B(7,2)")->status == Status::Match);
}

TEST_CASE("report is deterministic apart from timing") {
  ReproduceOptions o;
  o.quick = true;
  const auto a = to_json(reproduce_all(o));
  o.parallel = true;
  const auto b = to_json(reproduce_all(o));
  CHECK(a != without_volatile_fields(a));
  CHECK(without_volatile_fields(a) == without_volatile_fields(b));
  CHECK(a.find("\"exit_code\": 0") != std::string::npos);
}

TEST_CASE("exhausted budget skips entries") {
  ReproduceOptions o;
  o.quick = true;
  o.budget = std::chrono::milliseconds(0);
  const auto report = reproduce_all(o);
  CHECK(report.count(Status::Skipped) == report.entries.size());
  CHECK(report.exit_code() == 3);

  Report mixed;
  mixed.entries = {{"a", "1", "2", Status::Mismatch, 0}, {"b", "", "", Status::Skipped, 0}};
  CHECK(mixed.exit_code() == 1);
  CHECK(std::string(to_string(Status::FlaggedDiscrepancy)) == "flagged-discrepancy");
}
