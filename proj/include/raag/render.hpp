#pragma once

// SVG drawings of pilings: one vertical string per generator with its beads
// stacked bottom to top.

#include <string>

#include "raag/pilings.hpp"

namespace raag {

struct RenderOptions {
  double scale = 100.0;  // column spacing and bead pitch, in user units
  std::string plus_colour = "red";
  std::string zero_colour = "grey";
  std::string minus_colour = "blue";
  std::string filename = "piling.svg";  // used by callers that save to disk
};

/// Standalone SVG 1.1 document. Throws EmptyGroup for a piling with no
/// columns and Error for a non-positive scale.
std::string draw_piling(const Piling& p, const RenderOptions& opts = {});

}  // namespace raag
