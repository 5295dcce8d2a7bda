#pragma once

#include <string>

#include "tropmat/subdivision.hpp"

namespace tropmat {

struct RenderOptions {
  bool labels = false;
  double scale = 120.0;
};

/// SVG 1.1 drawing of the tropical arrangement dual to a subdivision of
/// nΔ². Vertices sit at centroids of maximal cells; each edge cell F
/// contributes a segment (or a ray, on the boundary) to every group i
/// with |F_i| ≥ 2. Throws std::invalid_argument unless d = 3.
std::string render_svg(const MixedSubdivision& s, const RenderOptions& options = {});

}  // namespace tropmat
