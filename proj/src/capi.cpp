#include "twistorlab/twistorlab.h"

#include <array>
#include <fstream>
#include <memory>
#include <string>

#include "twistorlab/error.hpp"
#include "twistorlab/grid.hpp"
#include "twistorlab/verify.hpp"

struct tl_report {
  twistorlab::SuiteReport report;
  std::array<std::string, 2> json;
  std::array<bool, 2> json_ready{false, false};
};

namespace {

thread_local std::string last_error;

tl_status status_of(twistorlab::ErrorCode c) { return static_cast<tl_status>(static_cast<int>(c) + 1); }

tl_status fail(tl_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

template <class Fn>
tl_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return TL_OK;
  } catch (const twistorlab::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(TL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TL_ERR_INTERNAL, "unknown exception");
  }
}

const std::vector<twistorlab::SuiteInfo>& suites() {
  static const auto s = twistorlab::list_suites();
  return s;
}

}  // namespace

static_assert(static_cast<int>(twistorlab::ErrorCode::InvalidArgument) + 1 == TL_ERR_INVALID_ARGUMENT);

extern "C" {

const char* tl_version(void) { return "0.1.0"; }

const char* tl_status_name(tl_status status) {
  switch (status) {
    case TL_OK: return "Ok";
    case TL_ERR_NULL_POINTER: return "NullPointer";
    case TL_ERR_INTERNAL: return "Internal";
    default: break;
  }
  if (status > TL_OK && status <= TL_ERR_INVALID_ARGUMENT) {
    return twistorlab::to_string(static_cast<twistorlab::ErrorCode>(status - 1)).data();
  }
  return "Unknown";
}

const char* tl_last_error(void) { return last_error.c_str(); }

size_t tl_suite_count(void) { return suites().size(); }

tl_status tl_suite_info(size_t index, const char** name, const char** anchor, int* checks) {
  if (index >= suites().size()) return fail(TL_ERR_INVALID_ARGUMENT, "suite index out of range");
  const auto& s = suites()[index];
  if (name) *name = s.name.c_str();
  if (anchor) *anchor = s.anchor.c_str();
  if (checks) *checks = s.checks;
  return TL_OK;
}

tl_status tl_run_suite(const char* name, uint64_t seed, int samples, double tol, tl_report** out) {
  if (!name || !out) return fail(TL_ERR_NULL_POINTER, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto r = std::make_unique<tl_report>();
    r->report = twistorlab::run_suite(name, seed, samples, tol);
    *out = r.release();
  });
}

void tl_report_free(tl_report* report) { delete report; }

int tl_report_pass(const tl_report* report) { return report && report->report.pass ? 1 : 0; }

size_t tl_report_check_count(const tl_report* report) { return report ? report->report.checks.size() : 0; }

tl_status tl_report_check(const tl_report* report, size_t index, tl_check_info* out) {
  if (!report || !out) return fail(TL_ERR_NULL_POINTER, "null argument");
  if (index >= report->report.checks.size()) return fail(TL_ERR_INVALID_ARGUMENT, "check index out of range");
  const auto& c = report->report.checks[index];
  *out = {c.id.c_str(),
          c.anchor.c_str(),
          c.samples,
          c.value,
          c.tol,
          c.bound == twistorlab::Bound::Lower ? 1 : 0,
          c.pass ? 1 : 0,
          c.error.c_str()};
  return TL_OK;
}

double tl_report_wall_seconds(const tl_report* report) { return report ? report->report.wall_seconds : 0.0; }

const char* tl_report_json(const tl_report* report, int include_timing) {
  if (!report) return nullptr;
  auto* r = const_cast<tl_report*>(report);
  const int k = include_timing ? 1 : 0;
  if (!r->json_ready[k]) {
    r->json[k] = twistorlab::report_json(r->report, include_timing != 0);
    r->json_ready[k] = true;
  }
  return r->json[k].c_str();
}

tl_status tl_report_write(const tl_report* report, const char* path, int include_timing) {
  if (!report || !path) return fail(TL_ERR_NULL_POINTER, "null argument");
  const char* text = tl_report_json(report, include_timing);
  std::ofstream out(path, std::ios::binary);
  if (!out) return fail(TL_ERR_IO, std::string("cannot open '") + path + "' for writing");
  out << text;
  out.close();
  if (!out) return fail(TL_ERR_IO, std::string("write to '") + path + "' failed");
  return TL_OK;
}

tl_status tl_grid_export(const char* field, const char* axes, const char* line, const char* out_path,
                         tl_grid_result* out) {
  if (!field || !axes || !out_path) return fail(TL_ERR_NULL_POINTER, "null argument");
  return guarded([&] {
    twistorlab::GridSpec spec;
    spec.field = twistorlab::parse_grid_field(field);
    spec.axes = twistorlab::parse_axes(axes);
    if (line && *line) spec.line = twistorlab::parse_line(line);
    const auto g = twistorlab::export_grid(spec, out_path);
    if (out) *out = {g.rows, g.nan_rows};
  });
}

}  // extern "C"
