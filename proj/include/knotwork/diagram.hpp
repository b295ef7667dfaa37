#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotwork {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

using HalfEdge = int;

enum class LabelFamily : int { X = 0, Y = 1, Z = 2, H = 3 };

char family_char(LabelFamily f);

// Name of an edge of the underlying spatial graph: x1, x2, ..., y1, z1, h3, ...
// Every arc of a diagram carries the label of the edge it is part of.
struct EdgeLabel {
  LabelFamily fam = LabelFamily::X;
  int index = 1;

  auto operator<=>(const EdgeLabel&) const = default;
  std::string str() const;
  static EdgeLabel parse(const std::string& s);
};

// Half-edge slots listed counterclockwise around the crossing. The under-strand
// occupies slots 0 and 2, the over-strand slots 1 and 3.
struct Crossing {
  int id = -1;
  std::array<HalfEdge, 4> slot{-1, -1, -1, -1};
  bool operator==(const Crossing&) const = default;
};

// Rigid graph vertex with a counterclockwise rotation of incident half-edges.
struct GraphNode {
  int id = -1;
  std::vector<HalfEdge> rot;
  bool operator==(const GraphNode&) const = default;
};

enum class FamilyKind { Knot, Theta, ThetaN, Oplus, Grid, Raw };

struct Family {
  FamilyKind kind = FamilyKind::Raw;
  int n = 0;
  int k = 0;
  int i = 0;
  std::string str() const;
  bool operator==(const Family&) const = default;
};

// A diagram of a knot or spatial graph: 4-valent crossings plus rigid vertices,
// with arcs pairing half-edges. Planarity of the rotation data is checked by
// validate() via the Euler count of each connected component.
struct SpatialDiagram {
  std::vector<Crossing> crossings;
  std::vector<GraphNode> nodes;
  std::vector<std::pair<HalfEdge, HalfEdge>> arcs;
  std::vector<EdgeLabel> arc_label;   // parallel to arcs
  std::vector<EdgeLabel> free_loops;  // closed strands meeting no crossing/node
  Family family;

  Crossing* crossing_by_id(int id);
  const Crossing* crossing_by_id(int id) const;
  GraphNode* node_by_id(int id);
  const GraphNode* node_by_id(int id) const;
  HalfEdge fresh_half_edge() const;  // one past the largest id in use
  int fresh_crossing_id() const;
  int fresh_node_id() const;
  bool operator==(const SpatialDiagram&) const = default;
};

// Incidence maps for one diagram; rebuild after any mutation.
struct Topology {
  struct Attach {
    bool at_crossing = false;
    int owner = -1;
    int pos = -1;
  };

  const SpatialDiagram* d = nullptr;
  std::map<HalfEdge, Attach> at;
  std::map<HalfEdge, HalfEdge> partner;
  std::map<HalfEdge, int> arc_of;

  explicit Topology(const SpatialDiagram& diagram);
  const Attach& attach(HalfEdge h) const;
  HalfEdge mate(HalfEdge h) const;  // other end of the arc
  HalfEdge next_ccw(HalfEdge h) const;
  HalfEdge prev_ccw(HalfEdge h) const;
  int degree_at(HalfEdge h) const;
  const EdgeLabel& label_at(HalfEdge h) const;
};

// Build a knot diagram from a PD code. Tuple order: counterclockwise from the
// incoming under-strand. Every arc gets `label`.
SpatialDiagram from_pd(const std::vector<std::array<int, 4>>& code,
                       EdgeLabel label = EdgeLabel{});

// Empty result means the diagram is well formed and planar.
std::vector<std::string> validate(const SpatialDiagram& d);
void require_valid(const SpatialDiagram& d, const std::string& where);

// Face boundaries as orbits of departing half-edges (next-ccw after crossing
// each arc). Each orbit starts at its smallest half-edge; orbits sorted.
std::vector<std::vector<HalfEdge>> faces(const SpatialDiagram& d);

int component_count(const SpatialDiagram& d);  // includes free loops
std::vector<SpatialDiagram> split_components(const SpatialDiagram& d);

// Closed strands of a node-free diagram, as alternating enter/leave half-edge
// sequences (even positions enter their crossing). Throws on graph nodes.
std::vector<std::vector<HalfEdge>> strand_circuits(const SpatialDiagram& d);
std::map<HalfEdge, int> orient_strands(const SpatialDiagram& d);  // +1 = enters
std::map<int, int> crossing_signs(const SpatialDiagram& d);
int writhe(const SpatialDiagram& d);

std::vector<EdgeLabel> edge_labels(const SpatialDiagram& d);
std::map<EdgeLabel, std::map<EdgeLabel, int>> crossing_matrix(
    const SpatialDiagram& d);

SpatialDiagram mirror(const SpatialDiagram& d);

// Remove the crossings in `dead`, connecting their half-edges directly as
// given by `joins`, and delete the arcs in `drop_arcs`. Surviving strands are
// re-stitched; a strand that closes up with no attachment left becomes a free
// loop. Dropped half-edges sitting on graph nodes leave the node's rotation.
void rewire_remove(SpatialDiagram& d, const std::vector<int>& dead,
                   const std::vector<std::pair<HalfEdge, HalfEdge>>& joins,
                   const std::vector<int>& drop_arcs);

// Delete a whole edge of the spatial graph: its arcs vanish, every crossing it
// runs through is smoothed along the other strand, and nodes left with
// valence 2 are spliced out (merged arcs keep the smaller label).
void delete_edge(SpatialDiagram& d, EdgeLabel label);

// Erase every valence-2 node, merging its two arcs.
void splice_valence2_nodes(SpatialDiagram& d);

void relabel_edge(SpatialDiagram& d, EdgeLabel from, EdgeLabel to);

// Dense ids and half-edge numbers, arcs normalized and sorted.
void renumber(SpatialDiagram& d);

// String equal for two diagrams iff they are isomorphic as labelled planar
// diagrams (half-edge and id renaming quotiented out).
std::string canonical_encoding(const SpatialDiagram& d, bool with_labels = true);

}  // namespace knotwork
