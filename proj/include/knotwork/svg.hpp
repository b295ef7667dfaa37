#pragma once

#include <string>

#include "knotwork/diagram.hpp"

namespace knotwork {

// Straight-line drawing of a diagram as a standalone SVG 1.1 document.
// Crossings and nodes are placed by a barycentric relaxation with the largest
// face pinned to a circle; every arc is subdivided so strands bend around the
// picture. At each crossing the over-strand is redrawn last over a background
// halo, producing the usual break in the under-strand. The picture is purely
// cosmetic — the combinatorial data is authoritative — but it is deterministic
// for a given diagram.
std::string to_svg(const SpatialDiagram& d);

void save_svg(const SpatialDiagram& d, const std::string& path);

}  // namespace knotwork
