#pragma once

// End-to-end checks.  Each check rebuilds everything it needs from the group
// presentation upward and returns a report of individual claims.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mnc/io.hpp"

namespace mnc {

enum class Status { pass, fail, indeterminate };
std::string to_string(Status s);

struct CheckReport {
  std::string check;
  json params = json::object();
  Status status = Status::pass;
  json witnesses = json::array();  // one record per claim, {"claim", "holds", ...}
  std::uint64_t enumerated = 0;
  std::int64_t millis = 0;

  /// Records a claim; a false claim turns the report into a failure.
  bool claim(const std::string& name, bool holds, json details = json::object());
  /// Records an open point; the status becomes indeterminate unless already failed.
  void open(const std::string& name, json details);
  /// Appends a record that does not affect the status.
  void note(const std::string& name, json details);
  void merge(const CheckReport& other, const std::string& prefix);
  bool passed() const { return status == Status::pass; }

  /// The diffable part: everything except millis.
  json payload() const;
  json to_json() const;
  std::string to_text() const;
};

CheckReport check_presentation(int r_min = 4, int r_max = 8, int associativity_r_max = 5);
CheckReport check_orders(int r_min = 4, int r_max = 8);
/// The order formula on explicit groups (used for negative controls).
CheckReport check_orders_on(const std::vector<Group>& groups);
CheckReport check_prop_a9(int r, int gamma);
CheckReport check_lemma_normal(int r, int gamma);
CheckReport check_aut_extraspecial();
CheckReport check_gl23_facts();
/// Over a rank-4 preset: strongly closed scan, closure from Hom_{E_0}, and the
/// fusing of the order-9 subgroups of E_0 under each Sylow-2 candidate.
CheckReport check_e0_pipeline(const std::string& preset);
CheckReport check_theorem_b340();
/// Only k = 3 is supported (|B| = 729); gamma in {1, 2}.
CheckReport check_theorem_b32k(int k = 3, int gamma = 1);
CheckReport check_alperin_table(const std::string& preset);
CheckReport check_fusion_axioms();

/// Preset names covered by `verify all`: Table 1, plus Table 2 when r_max >= 6.
std::vector<std::string> alperin_presets(int r_max);
/// The rank-4 presets.
std::vector<std::string> table1_presets();

struct CheckEntry {
  std::string id;
  std::function<CheckReport()> run;
};
/// The checks run by `verify all`, in order; rank-dependent ones are limited by r_max.
std::vector<CheckEntry> all_checks(int r_max = 8);
/// Check ids accepted by `verify <check>`.
std::vector<std::string> check_ids();

struct SuiteResult {
  std::vector<CheckReport> reports;  // in the order of the entries

  Status status() const;
  /// {"status", "reports": [payload...]}; no timing, byte-stable across runs.
  json payload() const;
  /// [{"check", "params", "millis"}], kept apart from the payload.
  json timing() const;
};
/// Runs entries on up to `jobs` threads; results keep entry order.
SuiteResult run_checks(const std::vector<CheckEntry>& entries, unsigned jobs = 1);

}  // namespace mnc
