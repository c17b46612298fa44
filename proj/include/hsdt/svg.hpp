#pragma once
//
// Region raster plots: one filled <rect> per inside grid cell over the unit
// square, x rightward and y upward, with plain axis labels. Output is fully
// deterministic (fixed number formatting).

#include <cstdint>
#include <span>
#include <string>

#include "hsdt/errors.hpp"

namespace hsdt {

struct PlotSpec {
  double d = 0.0;  // annotated in the title only
  int width = 800;
  int height = 800;
  std::string fill = "#4477AA";
  std::string x_label = "x";
  std::string y_label = "y";
};

// mask is n*n row-major: mask[j*n + i] nonzero means the cell at x index i,
// y index j is inside the region.
std::string render_region_svg(const PlotSpec& spec, int n,
                              std::span<const std::uint8_t> mask);

}  // namespace hsdt
