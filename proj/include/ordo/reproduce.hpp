#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace ordo::reproduce {

enum class Status { Match, Mismatch, FlaggedDiscrepancy, Skipped };

/// "match", "mismatch", "flagged-discrepancy", "skipped".
const char* to_string(Status status);

struct ReportEntry {
  std::string claim;
  std::string expected;
  std::string computed;
  Status status = Status::Skipped;
  double runtime_seconds = 0.0;
};

struct ReproduceOptions {
  /// Leaves out the B(3,3) enumeration and seed searches beyond B(4,2).
  bool quick = false;
  /// Wall-clock limit for the whole run; entries not finished in time are
  /// reported as skipped.
  std::optional<std::chrono::milliseconds> budget;
  /// Run entries concurrently; the report order does not change.
  bool parallel = false;
};

struct Report {
  std::vector<ReportEntry> entries;
  std::string timestamp;
  bool quick = false;

  std::size_t count(Status status) const;
  /// 0 all match (flagged entries allowed), 1 some mismatch, 3 some skipped.
  int exit_code() const;
};

/// Recomputes every published datum the library covers.
Report reproduce_all(const ReproduceOptions& options = {});

/// Fixed-width text table, one row per entry, then a summary line.
std::string format_table(const Report& report);

/// Stable JSON document; only `timestamp` and `runtime_seconds` vary between
/// runs with the same options.
std::string to_json(const Report& report);

}  // namespace ordo::reproduce
