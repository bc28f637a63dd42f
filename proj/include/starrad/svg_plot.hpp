#pragma once

#include <string>

#include "starrad/verify.hpp"

namespace starrad {

/// Render one (class, region) pair as an SVG: region boundary polyline,
/// image curves of z f'/f at r = R/2 and r = R, and the boundary-touch
/// marker for sharp items. Returns the document; deterministic for fixed
/// inputs.
std::string render_region_plot(ClassId cls, const TargetRegion& region, int samples);

}  // namespace starrad
