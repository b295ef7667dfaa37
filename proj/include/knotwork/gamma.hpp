#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "knotwork/diagram.hpp"

namespace knotwork {

// Non-crossing graph of a labelled diagram: one vertex per x- or z-edge of
// the spatial graph, with an edge between two vertices iff those edges never
// cross each other in the diagram. X vertices count as blue, Z as red.
struct GammaGraph {
  std::vector<EdgeLabel> vertices;                  // sorted, distinct
  std::set<std::pair<EdgeLabel, EdgeLabel>> edges;  // stored with first < second

  bool adjacent(const EdgeLabel& a, const EdgeLabel& b) const;
};

GammaGraph gamma(const SpatialDiagram& d);

// Lexicographically first triangle spanning both colours, if any.
std::optional<std::array<EdgeLabel, 3>> find_bicoloured_triangle(
    const GammaGraph& g);

// Exact maximum number of edges of a graph on n blue + n red labeled vertices
// containing no bicoloured triangle, with the lexicographically least maximum
// witness (edges sorted, lists compared elementwise).
struct ExtremalResult {
  int n = 0;
  int max_edges = 0;
  std::vector<std::pair<EdgeLabel, EdgeLabel>> witness;

  // 3n^2/2 - n: above this many edges a bicoloured triangle is forced
  // (meaningful from n = 2 up; two vertices admit no triangle at all).
  double bound() const { return 1.5 * n * n - n; }
};

ExtremalResult extremal_enumeration(int n);

// Plain-text table, one row per result: n, max_edges, bound, witness edges.
std::string extremal_report(const std::vector<ExtremalResult>& rows);

// Report on whether a theta-n-family diagram is in the regime that forces a
// bicoloured triangle: crossings(d) <= n (c1 + c2) and
// n > 2 (c1 + c2 - c12) + 1, with crossing numbers read from the knot table.
struct TriangleHypothesisReport {
  std::string status = "ok";  // "unknown" when a crossing number is not tabled
  int n = 0;
  int crossings = 0;
  int budget = 0;     // n (c1 + c2)
  int threshold = 0;  // 2 (c1 + c2 - c12) + 1
  bool within_budget = false;
  bool forced = false;  // within budget and n above the threshold
  bool has_triangle = false;
  std::optional<std::array<EdgeLabel, 3>> triangle;
  bool counterexample = false;  // forced yet triangle-free; reported, never fatal
};

TriangleHypothesisReport check_triangle_hypothesis(const SpatialDiagram& d,
                                                   const std::string& k1,
                                                   const std::string& k2);

}  // namespace knotwork
