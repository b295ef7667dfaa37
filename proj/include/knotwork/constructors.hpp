#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotwork/diagram.hpp"

namespace knotwork {

// A knot given either by a table name ("3_1", "4_1m", ...) or by a path to an
// .sgd file holding a single-component knot diagram.
struct KnotSpec {
  std::string text;
};

SpatialDiagram resolve_knot_spec(const KnotSpec& spec);

// Splice `knot`, cut open at its deterministic strand-walk start, into the
// edge with the given label. The tangle is inserted into the arc that carries
// the edge's stub at the lowest-numbered incident node. No-op for the
// 0-crossing unknot.
void tie_into_edge(SpatialDiagram& d, const EdgeLabel& edge,
                   const SpatialDiagram& knot);

// Connected sum of two knot diagrams; both are cut open at their deterministic
// strand-walk starts and the loose ends are joined crosswise. The crossing
// count is additive.
SpatialDiagram connected_sum(const SpatialDiagram& a, const SpatialDiagram& b);

// Theta-curve with edges x1, y1, z1: k1 tied into x1 and k2 into z1, y1 flat.
SpatialDiagram build_theta(const SpatialDiagram& k1, const SpatialDiagram& k2);

// 2n-theta-curve with edges x_1..x_n (k1 tied into each) and z_1..z_n (k2).
SpatialDiagram build_theta_n(int n, const SpatialDiagram& k1,
                             const SpatialDiagram& k2);

// Replace the two nodes of a 2n-valent two-node diagram by crossing-free
// smoothings chosen so the result is a single-component knot diagram with the
// same crossings.
SpatialDiagram resolve_nodes(const SpatialDiagram& d);

// n-strand parallel double of a knot diagram, cut open at a two-arc partition
// of its Gauss code into two 2n-valent nodes. Copies of the strand along the
// first partition arc become edges x_1..x_n, the rest z_1..z_n. Crossing signs
// copy the original except one inter-strand sign flip per same-family pair,
// placed in the cluster of the arc's first self-crossing, with a further flip
// if the pair's constituent knot comes out trivial. n = 1 returns the input.
SpatialDiagram double_diagram(const SpatialDiagram& k, int n);

// The sub-diagram spanned by two edges: every other edge deleted, crossings
// smoothed, leftover valence-2 nodes spliced out.
SpatialDiagram constituent(const SpatialDiagram& d, const EdgeLabel& a,
                           const EdgeLabel& b);

// Knot types of all two-edge constituents plus the membership verdict for the
// doubled-diagram family: every x/z pair must be k1 # k2, and no same-family
// pair may be the unknot or k1 # k2 # k1 # k2.
struct OmegaPair {
  EdgeLabel a;
  EdgeLabel b;
  std::string knot;
};

struct OmegaReport {
  std::vector<OmegaPair> pairs;
  std::string verdict;  // "member", "non-member" or "unknown"
};

OmegaReport check_omega_membership(const SpatialDiagram& d,
                                   const std::string& k1,
                                   const std::string& k2);

// Vertex connected sum of two theta-like diagrams with matching edge label
// sets: a's second node is glued to b's first node, same-label edges joining
// up end to end.
SpatialDiagram theta_connected_sum(const SpatialDiagram& a,
                                   const SpatialDiagram& b);

// Ladder graph with two poles, 2n rows of horizontal edges split into k+1
// columns by k crossing-free vertical walls. Row r, column c is tied into k1
// when r + c is odd, into k2 otherwise; with k = 0 this is build_theta_n.
SpatialDiagram build_oplus(int n, int k, const SpatialDiagram& k1,
                           const SpatialDiagram& k2);

// build_oplus with the i-th vertical wall deleted (1-based).
SpatialDiagram build_grid(int n, int k, int i, const SpatialDiagram& k1,
                          const SpatialDiagram& k2);

// Cut a ladder diagram along its crossing-free i-th wall into a west piece
// with i columns and an east piece with k+1-i columns, each closed by a fresh
// pole. Crossing counts add up exactly.
std::pair<SpatialDiagram, SpatialDiagram> cut_vertical(const SpatialDiagram& d,
                                                       int i);

// Size parameter of the smaller recursion branch when deleting wall i of k;
// throws when the two branches tie (i == (k+1)/2 exactly).
int recursion_parameter(int k, int i);

}  // namespace knotwork
