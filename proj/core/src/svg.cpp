#include "carpetdim/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace carpetdim {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string render_svg(const CarpetSpec& spec, int depth, int size) {
  if (depth < 0) throw std::invalid_argument("render_svg: depth must be >= 0");
  if (size < 1) throw std::invalid_argument("render_svg: size must be >= 1");
  const int d = spec.map_count();
  if (std::pow(static_cast<double>(d), depth) > 1e6)
    throw std::invalid_argument("render_svg: rectangle count exceeds 1e6");

  std::vector<double> off_x(spec.widths.size()), off_y(spec.heights.size());
  double acc = 0;
  for (std::size_t i = 0; i < spec.widths.size(); ++i) {
    off_x[i] = acc;
    acc += spec.widths[i];
  }
  acc = 0;
  for (std::size_t j = 0; j < spec.heights.size(); ++j) {
    off_y[j] = acc;
    acc += spec.heights[j];
  }

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";

  // depth-first in letter order gives lexicographic rectangle order; the
  // y-axis flips so row 0 renders at the bottom
  auto emit = [&](double x, double y, double w, double h) {
    svg << "  <rect x=\"" << fmt(x * size) << "\" y=\"" << fmt((1.0 - y - h) * size)
        << "\" width=\"" << fmt(w * size) << "\" height=\"" << fmt(h * size)
        << "\" fill=\"#264653\"/>\n";
  };
  auto walk = [&](auto&& self, int level, double x, double y, double w, double h) -> void {
    if (level == depth) {
      emit(x, y, w, h);
      return;
    }
    for (int l = 0; l < d; ++l) {
      const Cell& c = spec.cells[static_cast<std::size_t>(l)];
      self(self, level + 1, x + w * off_x[static_cast<std::size_t>(c.col)],
           y + h * off_y[static_cast<std::size_t>(c.row)],
           w * spec.widths[static_cast<std::size_t>(c.col)],
           h * spec.heights[static_cast<std::size_t>(c.row)]);
    }
  };
  walk(walk, 0, 0.0, 0.0, 1.0, 1.0);
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace carpetdim
