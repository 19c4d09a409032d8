// twistorlab command-line harness; talks to the library only through the C API.

#include <cmath>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "twistorlab/twistorlab.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int report_error(tl_status s) {
  const char* msg = tl_last_error();
  std::fprintf(stderr, "twistorlab: %s\n", *msg ? msg : tl_status_name(s));
  return kExitUsage;
}

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed{0};
  int samples{0};
  double tol{0.0};
  std::string out;
  bool timing{false};
  bool quiet{false};
};

int run_verify(const VerifyArgs& a) {
  tl_report* report = nullptr;
  const tl_status s = tl_run_suite(a.suite.c_str(), a.seed, a.samples, a.tol, &report);
  if (s != TL_OK) return report_error(s);

  FILE* log = a.out.empty() ? stderr : stdout;
  if (!a.quiet) {
    const size_t n = tl_report_check_count(report);
    for (size_t k = 0; k < n; ++k) {
      tl_check_info c;
      tl_report_check(report, k, &c);
      std::fprintf(log, "%s  %-40s %s %.3e (tol %.1e)%s%s\n", c.pass ? "PASS" : "FAIL", c.id, c.lower_bound ? "min" : "max",
                  c.value, c.tol, *c.error ? "  " : "", c.error);
    }
  }
  int code = tl_report_pass(report) ? kExitPass : kExitFail;
  std::fprintf(log, "suite %s: %s\n", a.suite.c_str(), code == kExitPass ? "pass" : "FAIL");

  if (a.out.empty()) {
    std::fputs(tl_report_json(report, a.timing), stdout);
  } else {
    const tl_status w = tl_report_write(report, a.out.c_str(), a.timing);
    if (w != TL_OK) code = report_error(w);
  }
  tl_report_free(report);
  return code;
}

int run_suites() {
  const size_t n = tl_suite_count();
  for (size_t k = 0; k < n; ++k) {
    const char* name = nullptr;
    const char* anchor = nullptr;
    int checks = 0;
    tl_suite_info(k, &name, &anchor, &checks);
    std::printf("%-12s %3d checks  %s\n", name, checks, anchor);
  }
  return kExitPass;
}

struct GridArgs {
  std::string field;
  std::string axes;
  std::string line;
  std::string out;
};

int run_grid(const GridArgs& a) {
  tl_grid_result r{};
  const tl_status s = tl_grid_export(a.field.c_str(), a.axes.c_str(), a.line.c_str(), a.out.c_str(), &r);
  if (s != TL_OK) return report_error(s);
  std::printf("wrote %zu rows to %s (%zu singular)\n", r.rows, a.out.c_str(), r.nan_rows);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twistorlab: seeded verification of quaternionic twistor constructions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tl_version());

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verification suite and write a JSON report");
  verify->add_option("--suite", va.suite, "suite name (see `suites`)")->required();
  verify->add_option("--seed", va.seed, "64-bit seed")->default_val(0);
  verify->add_option("--samples", va.samples, "primary sample count per check, 0 for defaults")
      ->default_val(0)
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--tol", va.tol, "residual tolerance, 0 for per-check defaults")
      ->default_val(0.0)
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--out", va.out, "report path (stdout when omitted)");
  verify->add_flag("--timing", va.timing, "include wall time in the report");
  verify->add_flag("-q,--quiet", va.quiet, "only print the summary line");

  auto* suites = app.add_subcommand("suites", "list suites");

  GridArgs ga;
  auto* grid = app.add_subcommand("grid", "sample a field on a grid and write CSV");
  grid->add_option("--field", ga.field, "lambda | curvature_norm | fct_residual | xi_norm")->required();
  grid->add_option("--axes", ga.axes, "e.g. q0=-2:2:0.25,q1=0 (axes q0..q3, y0..y3, t)")->required();
  grid->add_option("--line", ga.line, "null line 'p0,p1,p2,p3[,y0..y3];a1,a2,a3;b1,b2,b3' for axis t ('/' also separates)");
  grid->add_option("--out", ga.out, "CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  if (*verify) return run_verify(va);
  if (*suites) return run_suites();
  if (*grid) return run_grid(ga);
  return kExitUsage;
}
