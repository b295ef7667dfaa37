#pragma once

#include <vector>

#include "knotwork/diagram.hpp"

namespace knotwork {

// A crossing-free route for an extra arc between the two nodes of a theta
// diagram. When no pair of edges crosses, some face touches both nodes; the
// route runs inside that face, leaving through the recorded corners.
struct ArcPath {
  int face = -1;             // index into faces(d)
  HalfEdge corner_n1 = -1;   // first departing half-edge at the lower node id
  HalfEdge corner_n2 = -1;   // same at the higher node id
  bool operator==(const ArcPath&) const = default;
};

// Requires a two-node diagram with zero off-diagonal crossing counts. Failure
// to find a face would contradict the connectivity argument behind that
// precondition, so it is reported loudly instead of being smoothed over.
ArcPath connecting_arc(const SpatialDiagram& d);

struct SplitPiece {
  EdgeLabel edge;
  SpatialDiagram diagram;
};

// One knot diagram per edge of the spatial graph: the edge closed up through
// the connecting arc. The closure adds no crossings, so each piece keeps
// exactly the self-crossings of its edge. Pieces are sorted by edge label.
std::vector<SplitPiece> split_along(const SpatialDiagram& d,
                                    const ArcPath& path);

}  // namespace knotwork
