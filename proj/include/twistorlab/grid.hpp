#pragma once

// CSV sampling of instanton quantities on coordinate grids.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "twistorlab/ambitwistor.hpp"

namespace twistorlab {

enum class GridField { Lambda, CurvatureNorm, FctResidual, XiNorm };

// name is one of q0..q3 (real parts), y0..y3 (imaginary parts) or t (line
// parameter). A pinned coordinate has min == max and step 0.
struct Axis {
  std::string name;
  double min{0.0};
  double max{0.0};
  double step{0.0};

  std::size_t nodes() const;
  double at(std::size_t i) const { return min + static_cast<double>(i) * step; }
};

struct GridSpec {
  GridField field{GridField::CurvatureNorm};
  std::vector<Axis> axes;
  std::optional<NullLine> line;  // required when an axis is t
};

struct GridExport {
  std::vector<std::string> columns;
  std::size_t rows{0};
  std::size_t nan_rows{0};
};

std::string_view to_string(GridField f);
// Throws InvalidArgument.
GridField parse_grid_field(std::string_view name);

// "q0=-2:2:0.25,q1=0.5". Unknown names, bad numbers or repeated names throw
// InvalidArgument; min > max or a non-positive step throws IoError.
std::vector<Axis> parse_axes(std::string_view spec);

// "p0,p1,p2,p3[,y0,y1,y2,y3];a1,a2,a3;b1,b2,b3" for base point and the two
// structures (normalized); '/' may stand in for ';'. Throws InvalidArgument.
NullLine parse_line(std::string_view spec);

// The point of a grid node: line base (or 0), plus t times the line
// direction, plus the named coordinate offsets.
Biquaternion grid_point(const GridSpec& spec, const std::vector<double>& coords);

// One row per node, first axis slowest. Values are written with 17
// significant digits; rows where the field is singular carry nan.
// lambda writes its real and imaginary parts.
GridExport write_grid(const GridSpec& spec, std::ostream& out);
// Throws IoError when the file cannot be written.
GridExport export_grid(const GridSpec& spec, const std::string& out_path);

}  // namespace twistorlab
