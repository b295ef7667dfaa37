#pragma once

#include <array>
#include <vector>

#include "knotwork/diagram.hpp"

namespace kwtest {

using knotwork::EdgeLabel;
using knotwork::LabelFamily;
using knotwork::SpatialDiagram;

// PD codes of the small table knots, tuples counterclockwise from the incoming
// under-strand.
inline std::vector<std::array<int, 4>> pd_trefoil() {
  return {{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}};
}

// (2,n) torus knot pattern; pd_torus2(3) is pd_trefoil.
inline std::vector<std::array<int, 4>> pd_torus2(int n) {
  std::vector<std::array<int, 4>> code;
  auto wrap = [n](int e) { return (e - 1) % (2 * n) + 1; };
  for (int i = 0; i < n; ++i) {
    code.push_back({wrap(2 * i + 1), wrap(2 * i + 1 + n), wrap(2 * i + 2),
                    wrap(2 * i + 2 + n)});
  }
  return code;
}

inline std::vector<std::array<int, 4>> pd_figure_eight() {
  return {{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}};
}

inline std::vector<std::array<int, 4>> pd_5_1() {
  return {{2, 8, 3, 7}, {4, 10, 5, 9}, {6, 2, 7, 1}, {8, 4, 9, 3}, {10, 6, 1, 5}};
}

inline std::vector<std::array<int, 4>> pd_5_2() {
  return {{1, 4, 2, 5}, {3, 8, 4, 9}, {5, 10, 6, 1}, {9, 6, 10, 7}, {7, 2, 8, 3}};
}

// Crossing-free theta-curve: two nodes joined by edges x1, y1, z1.
inline SpatialDiagram planar_theta() {
  SpatialDiagram d;
  d.family = {knotwork::FamilyKind::Theta, 0, 0, 0};
  d.nodes.push_back({0, {4, 2, 0}});
  d.nodes.push_back({1, {1, 3, 5}});
  d.arcs = {{0, 1}, {2, 3}, {4, 5}};
  d.arc_label = {EdgeLabel{LabelFamily::X, 1}, EdgeLabel{LabelFamily::Y, 1},
                 EdgeLabel{LabelFamily::Z, 1}};
  return d;
}

// One-crossing unknot with positive writhe.
inline SpatialDiagram positive_kink() {
  SpatialDiagram d;
  d.family = {knotwork::FamilyKind::Knot, 0, 0, 0};
  d.crossings.push_back({0, {0, 1, 2, 3}});
  d.arcs = {{2, 1}, {3, 0}};
  d.arc_label = {EdgeLabel{}, EdgeLabel{}};
  return d;
}

// Two circles x1 (under) and y1 (over) crossing twice; splits under one
// Reidemeister II move.
inline SpatialDiagram clasp_circles() {
  SpatialDiagram d;
  d.family = {knotwork::FamilyKind::Raw, 0, 0, 0};
  d.crossings.push_back({0, {0, 1, 2, 3}});
  d.crossings.push_back({1, {4, 5, 6, 7}});
  d.arcs = {{0, 4}, {6, 2}, {3, 5}, {7, 1}};
  d.arc_label = {EdgeLabel{LabelFamily::X, 1}, EdgeLabel{LabelFamily::X, 1},
                 EdgeLabel{LabelFamily::Y, 1}, EdgeLabel{LabelFamily::Y, 1}};
  return d;
}

// Theta-curve whose x edge carries one positive kink: xx = 1, all other
// crossing counts 0.
inline SpatialDiagram kinked_theta() {
  SpatialDiagram d;
  d.family = {knotwork::FamilyKind::Theta, 0, 0, 0};
  d.nodes.push_back({0, {4, 2, 0}});
  d.nodes.push_back({1, {1, 3, 5}});
  d.crossings.push_back({0, {6, 7, 8, 9}});
  d.arcs = {{0, 6}, {8, 7}, {9, 1}, {2, 3}, {4, 5}};
  d.arc_label = {EdgeLabel{LabelFamily::X, 1}, EdgeLabel{LabelFamily::X, 1},
                 EdgeLabel{LabelFamily::X, 1}, EdgeLabel{LabelFamily::Y, 1},
                 EdgeLabel{LabelFamily::Z, 1}};
  return d;
}

// Theta-curve where y pokes over x twice (the clasp picture with nodes on the
// two strands and z drawn through their common face): xy = 2.
inline SpatialDiagram poke_theta() {
  SpatialDiagram d;
  d.family = {knotwork::FamilyKind::Theta, 0, 0, 0};
  d.crossings.push_back({0, {0, 1, 2, 3}});
  d.crossings.push_back({1, {4, 5, 6, 7}});
  d.nodes.push_back({0, {8, 10, 9}});
  d.nodes.push_back({1, {11, 12, 13}});
  d.arcs = {{0, 8}, {9, 4}, {6, 2}, {3, 12}, {13, 5}, {7, 1}, {10, 11}};
  d.arc_label = {EdgeLabel{LabelFamily::X, 1}, EdgeLabel{LabelFamily::X, 1},
                 EdgeLabel{LabelFamily::X, 1}, EdgeLabel{LabelFamily::Y, 1},
                 EdgeLabel{LabelFamily::Y, 1}, EdgeLabel{LabelFamily::Y, 1},
                 EdgeLabel{LabelFamily::Z, 1}};
  return d;
}

}  // namespace kwtest
