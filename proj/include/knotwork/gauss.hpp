#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotwork/diagram.hpp"

namespace knotwork {

// One passage of the strand through a crossing.
struct GaussVisit {
  int label = 0;  // numbered by first encounter along the strand, from 1
  bool over = false;
  int sign = 1;
  int crossing = -1;  // diagram crossing id behind this label
  bool operator==(const GaussVisit&) const = default;
};

// Extended Gauss code of a knot diagram: the cyclic sequence of crossing
// passages along the closed strand. Text form "O1+,U2+,O3+,...".
struct GaussCode {
  std::vector<GaussVisit> visits;
  bool operator==(const GaussCode&) const = default;
  std::string str() const;  // empty for the 0-crossing unknot
};

// Two cut points between visits, splitting the cyclic sequence into the arc
// of indices [first, second) and its complement.
struct CodePartition {
  int first = 0;
  int second = 0;
  bool operator==(const CodePartition&) const = default;
};

// One step of the strand traversal: the crossing entered, the slot it is
// entered through, and the half-edge sitting in that slot.
struct StrandPassage {
  int crossing = -1;
  int entry_pos = -1;
  HalfEdge entry = -1;
  bool operator==(const StrandPassage&) const = default;
};

// Deterministic traversal of the single closed strand of a knot diagram,
// starting where the under-strand leaves the lowest-numbered crossing.
// Empty for the 0-crossing unknot.
std::vector<StrandPassage> strand_walk(const SpatialDiagram& d);

// The Gauss code read off strand_walk.
GaussCode gauss_code(const SpatialDiagram& d);

std::vector<int> label_sequence(const GaussCode& c);

// How many labels are visited twice inside each arc of the partition.
std::pair<int, int> partition_self_counts(const GaussCode& c,
                                          const CodePartition& p);

// True iff the label sequence is 1..c,1..c up to rotation and relabeling;
// equivalently, the sequence equals itself shifted by half its length.
bool is_double_run(const GaussCode& c);

// A cut pair whose two arcs each pass through some crossing twice, if any
// exists. The search is exhaustive over all cut pairs; among valid ones it
// returns a partition minimizing the larger self-count (first such pair in
// (first, second) order), so the two arcs are as balanced as possible.
std::optional<CodePartition> find_partition(const GaussCode& c);

}  // namespace knotwork
