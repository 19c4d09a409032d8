#include "twistorlab/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "twistorlab/error.hpp"
#include "twistorlab/fct.hpp"

namespace twistorlab {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

double number(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v)) {
    throw Error(ErrorCode::InvalidArgument, "not a number: '" + std::string(s) + "'");
  }
  return v;
}

bool known_axis(std::string_view n) {
  if (n == "t") return true;
  return n.size() == 2 && (n[0] == 'q' || n[0] == 'y') && n[1] >= '0' && n[1] <= '3';
}

std::string format(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool singular(ErrorCode c) {
  return c == ErrorCode::SingularField || c == ErrorCode::ZeroDivisor || c == ErrorCode::SingularPoint ||
         c == ErrorCode::SingularOnPath;
}

}  // namespace

std::size_t Axis::nodes() const {
  if (step == 0.0) return 1;
  return static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
}

std::string_view to_string(GridField f) {
  switch (f) {
    case GridField::Lambda: return "lambda";
    case GridField::CurvatureNorm: return "curvature_norm";
    case GridField::FctResidual: return "fct_residual";
    case GridField::XiNorm: return "xi_norm";
  }
  return "?";
}

GridField parse_grid_field(std::string_view name) {
  for (GridField f : {GridField::Lambda, GridField::CurvatureNorm, GridField::FctResidual, GridField::XiNorm}) {
    if (name == to_string(f)) return f;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown grid field '" + std::string(name) + "'");
}

std::vector<Axis> parse_axes(std::string_view spec) {
  std::vector<Axis> axes;
  for (std::string_view item : split(spec, ',')) {
    item = trim(item);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorCode::InvalidArgument, "axis needs name=range");
    Axis a;
    a.name = std::string(trim(item.substr(0, eq)));
    if (!known_axis(a.name)) throw Error(ErrorCode::InvalidArgument, "unknown axis '" + a.name + "'");
    for (const auto& b : axes) {
      if (b.name == a.name) throw Error(ErrorCode::InvalidArgument, "axis '" + a.name + "' given twice");
    }
    const auto parts = split(item.substr(eq + 1), ':');
    if (parts.size() == 1) {
      a.min = a.max = number(parts[0]);
    } else if (parts.size() == 3) {
      a.min = number(parts[0]);
      a.max = number(parts[1]);
      a.step = number(parts[2]);
      if (a.min > a.max) throw Error(ErrorCode::IoError, "axis '" + a.name + "' has min > max");
      if (a.step <= 0.0) throw Error(ErrorCode::IoError, "axis '" + a.name + "' needs a positive step");
    } else {
      throw Error(ErrorCode::InvalidArgument, "axis range is value or min:max:step");
    }
    axes.push_back(a);
  }
  return axes;
}

NullLine parse_line(std::string_view text) {
  std::string spec(text);
  std::replace(spec.begin(), spec.end(), '/', ';');
  const auto parts = split(spec, ';');
  if (parts.size() != 3) throw Error(ErrorCode::InvalidArgument, "line is point;eta1;eta2");
  const auto p = split(parts[0], ',');
  if (p.size() != 4 && p.size() != 8) throw Error(ErrorCode::InvalidArgument, "line point needs 4 or 8 numbers");
  Biquaternion base;
  for (int mu = 0; mu < 4; ++mu) {
    base.re[mu] = number(p[mu]);
    if (p.size() == 8) base.im[mu] = number(p[4 + mu]);
  }
  auto eta = [](std::string_view s) {
    const auto c = split(s, ',');
    if (c.size() != 3) throw Error(ErrorCode::InvalidArgument, "structure needs 3 numbers");
    return UnitImaginary::normalized(Quaternion{0.0, number(c[0]), number(c[1]), number(c[2])});
  };
  return {base, eta(parts[1]), eta(parts[2])};
}

Biquaternion grid_point(const GridSpec& spec, const std::vector<double>& coords) {
  Biquaternion q = spec.line ? spec.line->p : Biquaternion{};
  for (std::size_t k = 0; k < spec.axes.size(); ++k) {
    const std::string& n = spec.axes[k].name;
    if (n == "t") {
      if (!spec.line) throw Error(ErrorCode::InvalidArgument, "axis t needs a line");
      q = q + coords[k] * spec.line->direction();
    } else {
      const int mu = n[1] - '0';
      (n[0] == 'q' ? q.re[mu] : q.im[mu]) += coords[k];
    }
  }
  return q;
}

GridExport write_grid(const GridSpec& spec, std::ostream& out) {
  bool has_t = false;
  for (const auto& a : spec.axes) has_t = has_t || a.name == "t";
  if (has_t && !spec.line) throw Error(ErrorCode::InvalidArgument, "axis t needs a line");

  GridExport g;
  for (const auto& a : spec.axes) g.columns.push_back(a.name);
  g.columns.push_back("value");
  if (spec.field == GridField::Lambda) g.columns.push_back("value_im");
  for (std::size_t k = 0; k < g.columns.size(); ++k) out << (k ? "," : "") << g.columns[k];
  out << "\n";

  const Field xi = bpst_xi_field();
  const Field id = Field::identity(Domain::Complex);
  std::size_t total = 1;
  for (const auto& a : spec.axes) total *= a.nodes();

  std::vector<double> coords(spec.axes.size());
  for (std::size_t row = 0; row < total; ++row) {
    std::size_t rest = row;
    for (std::size_t k = spec.axes.size(); k-- > 0;) {
      const std::size_t n = spec.axes[k].nodes();
      coords[k] = spec.axes[k].at(rest % n);
      rest /= n;
    }
    double value = 0.0, value_im = 0.0;
    try {
      const Biquaternion q = grid_point(spec, coords);
      switch (spec.field) {
        case GridField::Lambda: {
          const Complex lam = sigma_lambda(nabla_apply(xi, id, q));
          value = lam.real();
          value_im = lam.imag();
          break;
        }
        case GridField::CurvatureNorm: value = curvature(xi, q).left.norm(); break;
        case GridField::FctResidual: value = fct_residual(xi, id, q); break;
        case GridField::XiNorm: value = xi.at(q).norm(); break;
      }
    } catch (const Error& e) {
      if (!singular(e.code())) throw;
      value = value_im = std::numeric_limits<double>::quiet_NaN();
    }
    if (std::isnan(value)) ++g.nan_rows;
    for (double c : coords) out << format(c) << ",";
    out << format(value);
    if (spec.field == GridField::Lambda) out << "," << format(value_im);
    out << "\n";
    ++g.rows;
  }
  return g;
}

GridExport export_grid(const GridSpec& spec, const std::string& out_path) {
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + out_path + "' for writing");
  GridExport g = write_grid(spec, out);
  out.close();
  if (!out) throw Error(ErrorCode::IoError, "write to '" + out_path + "' failed");
  return g;
}

}  // namespace twistorlab
