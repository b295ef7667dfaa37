#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knotwork/diagram.hpp"

namespace knotwork {

// Local diagram moves: the three Reidemeister moves in both directions plus a
// rigid-vertex slide that wraps an edge end once around its node (crossing
// every other edge there once) or unwraps such a wrap again.
enum class MoveKind { R1Up, R1Down, R2Up, R2Down, R3, VSlide };

// One move at a concrete site. Sites are written in the ids of one particular
// diagram and do not survive renumbering, so generate moves freshly against
// the diagram they will be applied to.
struct Move {
  MoveKind kind = MoveKind::R1Up;
  int arc = -1;        // R1Up: arc to kink (-1 when `loop` is used instead)
  int loop = -1;       // R1Up: free loop to kink (index into free_loops)
  int variant = 0;     // R1Up: slot pair (variant, variant+1) takes the kink
  int crossing = -1;   // R1Down: crossing carrying a kink loop
  HalfEdge h1 = -1;    // R2Up: departing half-edge of the strand going over;
                       // R2Down / R3: a departing half-edge of the face
  HalfEdge h2 = -1;    // R2Up: departing half-edge of the strand going under
  int node = -1;       // VSlide: node id
  int pos = -1;        // VSlide: rotation position of the edge end to slide
  bool over = true;    // VSlide: the slid strand passes over the other edges
  bool expand = true;  // VSlide: wrap when true, unwrap when false

  std::string str() const;
};

Move r1_up(int arc, int variant);
Move r1_up_loop(int loop, int variant);
Move r1_down(int crossing);
Move r2_up(HalfEdge over_depart, HalfEdge under_depart);
Move r2_down(HalfEdge face_half_edge);
Move r3(HalfEdge face_half_edge);
Move v_slide(int node, int pos, bool over, bool expand);

// Apply one move. Throws Error when the site is not valid in d. The result is
// renumbered and validated. Crossing count changes by +-1 (R1), +-2 (R2),
// 0 (R3) or +-(deg - 1) for a V-slide at a node of degree deg.
SpatialDiagram apply(const SpatialDiagram& d, const Move& m);

// Every move valid in d, deterministically ordered with the shrinking moves
// first. Growing moves whose crossing delta exceeds max_growth are dropped.
std::vector<Move> enumerate_moves(const SpatialDiagram& d, int max_growth);

// Obfuscate a diagram by `count` growing or neutral moves (R1+, R2+, R3,
// V-wrap) chosen by a seeded deterministic generator.
SpatialDiagram scramble(const SpatialDiagram& d, int count,
                        std::uint64_t seed);

struct SearchResult {
  SpatialDiagram best;
  int best_crossings = 0;
  std::vector<Move> trace;  // replays from the renumbered input to `best`
  long long explored = 0;   // states expanded
  bool exhausted = false;   // true when the search stopped on the node budget
};

// Deterministic best-first search over the move graph for a low-crossing
// equivalent diagram; the result is an upper bound on the crossing number,
// never a minimality certificate. `budget` caps the number of distinct
// diagrams the search may discover and `depth` caps how far above the
// starting crossing count intermediate diagrams may grow. Equal crossing
// counts are tie-broken by lexicographic encoding.
SearchResult simplify(const SpatialDiagram& d, long long budget = 20000,
                      int depth = 2);

}  // namespace knotwork
