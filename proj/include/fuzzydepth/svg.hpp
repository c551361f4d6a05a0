#pragma once

#include <cstddef>
#include <string>

#include "fuzzydepth/dataset.hpp"

namespace fuzzydepth {

// Which depth column drives the coloring.
enum class DepthKind { naive, modified, simplicial };

struct PlotOptions {
  std::size_t top_k = 5;
  std::size_t bottom_k = 0;
  bool highlight_median = false;
  DepthKind by = DepthKind::modified;
};

// Renders the sample as membership polygons (x: data axis, y: membership).
// All items are drawn in grey; the top_k deepest are colored on a fixed
// red -> yellow ramp, the bottom_k shallowest on an aquamarine -> violet
// ramp, and the median polygon is stroked black on request.  Output bytes
// are deterministic for fixed inputs.
std::string render_svg(const ReportFile& report, const PlotOptions& options);

}  // namespace fuzzydepth
