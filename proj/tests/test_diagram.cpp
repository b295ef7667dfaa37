#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "knotwork/diagram.hpp"

using namespace knotwork;
using namespace kwtest;

TEST_CASE("edge labels parse and print") {
  CHECK(EdgeLabel{LabelFamily::X, 3}.str() == "x3");
  CHECK(EdgeLabel::parse("z12") == EdgeLabel{LabelFamily::Z, 12});
  CHECK(EdgeLabel::parse("h1") == EdgeLabel{LabelFamily::H, 1});
  CHECK_THROWS_AS(EdgeLabel::parse("q1"), Error);
  CHECK_THROWS_AS(EdgeLabel::parse("x"), Error);
  CHECK(EdgeLabel{LabelFamily::X, 2} < EdgeLabel{LabelFamily::Y, 1});
}

TEST_CASE("planar theta validates with three faces") {
  SpatialDiagram d = planar_theta();
  CHECK(validate(d).empty());
  CHECK(faces(d).size() == 3);
  CHECK(component_count(d) == 1);
}

TEST_CASE("trefoil from PD code") {
  SpatialDiagram d = from_pd(pd_trefoil());
  CHECK(validate(d).empty());
  auto f = faces(d);
  REQUIRE(f.size() == 5);
  CHECK(f[0] == std::vector<HalfEdge>{0, 4, 8});
  CHECK(f[1] == std::vector<HalfEdge>{1, 7});
  CHECK(f[2] == std::vector<HalfEdge>{2, 10, 6});
  CHECK(f[3] == std::vector<HalfEdge>{3, 9});
  CHECK(f[4] == std::vector<HalfEdge>{5, 11});
  auto circuits = strand_circuits(d);
  REQUIRE(circuits.size() == 1);
  CHECK(circuits[0].size() == 12);
  int w = writhe(d);
  CHECK(std::abs(w) == 3);
  CHECK(writhe(mirror(d)) == -w);
  CHECK(validate(mirror(d)).empty());
}

TEST_CASE("figure eight has writhe zero") {
  SpatialDiagram d = from_pd(pd_figure_eight());
  CHECK(validate(d).empty());
  CHECK(faces(d).size() == 6);
  CHECK(writhe(d) == 0);
}

TEST_CASE("positive kink") {
  SpatialDiagram d = positive_kink();
  CHECK(validate(d).empty());
  CHECK(faces(d).size() == 3);
  CHECK(writhe(d) == 1);
  SpatialDiagram m = mirror(d);
  CHECK(writhe(m) == -1);
}

TEST_CASE("broken diagrams are reported") {
  SpatialDiagram d = planar_theta();
  d.arcs.push_back({0, 2});  // 0 and 2 already used
  d.arc_label.push_back(EdgeLabel{});
  auto problems = validate(d);
  REQUIRE(!problems.empty());
  bool dup = false;
  for (const auto& p : problems)
    if (p.find("duplicate half-edge") != std::string::npos) dup = true;
  CHECK(dup);

  SpatialDiagram e = planar_theta();
  e.arcs.pop_back();
  e.arc_label.pop_back();
  problems = validate(e);
  bool unpaired = false;
  for (const auto& p : problems)
    if (p.find("unpaired half-edge") != std::string::npos) unpaired = true;
  CHECK(unpaired);

  // Non-planar rotation data: flip one node's rotation order.
  SpatialDiagram g = planar_theta();
  g.nodes[1].rot = {3, 1, 5};
  problems = validate(g);
  bool euler = false;
  for (const auto& p : problems)
    if (p.find("euler") != std::string::npos) euler = true;
  CHECK(euler);
}

TEST_CASE("crossing matrix counts by edge pair") {
  SpatialDiagram d = from_pd(pd_trefoil());
  auto m = crossing_matrix(d);
  EdgeLabel x1{LabelFamily::X, 1};
  CHECK(m[x1][x1] == 3);

  SpatialDiagram c = clasp_circles();
  CHECK(validate(c).empty());
  auto mc = crossing_matrix(c);
  EdgeLabel y1{LabelFamily::Y, 1};
  CHECK(mc[x1][y1] == 2);
  CHECK(mc[y1][x1] == 2);
  CHECK(mc[x1][x1] == 0);
  CHECK(mc[y1][y1] == 0);
}

TEST_CASE("delete edge dissolves crossings along the other strand") {
  SpatialDiagram c = clasp_circles();
  delete_edge(c, EdgeLabel{LabelFamily::Y, 1});
  CHECK(c.crossings.empty());
  CHECK(c.arcs.empty());
  REQUIRE(c.free_loops.size() == 1);
  CHECK(c.free_loops[0] == EdgeLabel{LabelFamily::X, 1});
  CHECK(component_count(c) == 1);

  SpatialDiagram k = positive_kink();
  delete_edge(k, EdgeLabel{});
  CHECK(k.crossings.empty());
  CHECK(k.arcs.empty());
  CHECK(k.free_loops.empty());

  // Valence-2 nodes left by the deletion are spliced away: the x- and z-edges
  // of the theta close up into one unknotted circle.
  SpatialDiagram t = planar_theta();
  delete_edge(t, EdgeLabel{LabelFamily::Y, 1});
  CHECK(validate(t).empty());
  CHECK(t.nodes.empty());
  CHECK(t.arcs.empty());
  REQUIRE(t.free_loops.size() == 1);
  CHECK(t.free_loops[0] == EdgeLabel{LabelFamily::X, 1});
}

TEST_CASE("components split") {
  SpatialDiagram d = from_pd(pd_trefoil());
  SpatialDiagram t = planar_theta();
  // Disjoint union with shifted ids.
  SpatialDiagram u = d;
  for (auto& n : t.nodes) {
    GraphNode n2 = n;
    for (auto& h : n2.rot) h += 100;
    u.nodes.push_back(n2);
  }
  for (size_t i = 0; i < t.arcs.size(); ++i) {
    u.arcs.push_back({t.arcs[i].first + 100, t.arcs[i].second + 100});
    u.arc_label.push_back(t.arc_label[i]);
  }
  u.free_loops.push_back(EdgeLabel{LabelFamily::Z, 9});
  CHECK(validate(u).empty());
  CHECK(component_count(u) == 3);
  auto pieces = split_components(u);
  REQUIRE(pieces.size() == 3);
  CHECK(pieces[0].crossings.size() == 3);
  CHECK(pieces[1].nodes.size() == 2);
  CHECK(pieces[2].free_loops.size() == 1);
  for (const auto& p : pieces) CHECK(validate(p).empty());
}

TEST_CASE("canonical encoding ignores id names") {
  SpatialDiagram d = from_pd(pd_trefoil());
  SpatialDiagram e = d;
  // Shift every id and half-edge.
  for (auto& c : e.crossings) {
    c.id += 7;
    for (auto& h : c.slot) h = h * 3 + 5;
  }
  for (auto& [a, b] : e.arcs) {
    a = a * 3 + 5;
    b = b * 3 + 5;
  }
  CHECK(canonical_encoding(d) == canonical_encoding(e));
  CHECK(canonical_encoding(d) == canonical_encoding(mirror(mirror(d))));

  SpatialDiagram f = from_pd(pd_figure_eight());
  CHECK(canonical_encoding(d) != canonical_encoding(f));

  // Labels distinguish when requested.
  SpatialDiagram g = from_pd(pd_trefoil(), EdgeLabel{LabelFamily::Z, 4});
  CHECK(canonical_encoding(d) != canonical_encoding(g));
  CHECK(canonical_encoding(d, false) == canonical_encoding(g, false));
}

TEST_CASE("renumber is stable") {
  SpatialDiagram d = from_pd(pd_figure_eight());
  for (auto& c : d.crossings) {
    c.id += 11;
    for (auto& h : c.slot) h += 40;
  }
  for (auto& [a, b] : d.arcs) {
    a += 40;
    b += 40;
  }
  std::string before = canonical_encoding(d);
  renumber(d);
  CHECK(validate(d).empty());
  CHECK(canonical_encoding(d) == before);
  CHECK(d.crossings[0].id == 0);
  CHECK(d.crossings[0].slot[0] == 0);
}

TEST_CASE("crossing signs need a consistent orientation") {
  SpatialDiagram c = clasp_circles();
  auto signs = crossing_signs(c);
  REQUIRE(signs.size() == 2);
  // The two clasp crossings have opposite signs under any orientation.
  CHECK(signs[0] + signs[1] == 0);
}
