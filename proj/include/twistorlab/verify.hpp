#pragma once

// Seeded verification suites and their JSON reports.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace twistorlab {

enum class Bound {
  Upper,  // pass when value <= tol
  Lower,  // pass when value > tol
};

struct CheckResult {
  std::string id;
  std::string anchor;
  int samples{0};
  double value{0.0};  // max residual (Upper) or min margin (Lower); NaN on error
  double tol{0.0};
  Bound bound{Bound::Upper};
  bool pass{false};
  std::string error;  // empty unless the check threw
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed{0};
  int samples{0};
  double tol{0.0};
  std::vector<CheckResult> checks;
  double wall_seconds{0.0};
  bool pass{false};
};

struct SuiteInfo {
  std::string name;
  std::string anchor;
  int checks;
};

inline constexpr std::string_view kReportSchema = "twistorlab-report/1";

std::vector<SuiteInfo> list_suites();

// samples <= 0 keeps each check's own sample count; otherwise it replaces the
// primary count of every check. tol <= 0 keeps each check's tolerance;
// otherwise it replaces the tolerance of every residual check (checks whose
// threshold is structural, like the convergence-rate window, keep theirs).
// Throws UnknownSuite.
SuiteReport run_suite(std::string_view name, std::uint64_t seed, int samples, double tol);

// Runs one check by id ("bpst.patching"). Same override rules as run_suite.
// Throws UnknownSuite for an unknown id.
CheckResult run_check(std::string_view id, std::uint64_t seed, int samples, double tol);

// Check ids of a suite, in report order. Throws UnknownSuite.
std::vector<std::string> list_checks(std::string_view suite);

// Fixed key order; wall time only when include_timing is set, so that reports
// of repeated runs compare byte for byte.
std::string report_json(const SuiteReport& report, bool include_timing);

}  // namespace twistorlab
