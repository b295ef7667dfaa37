#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "knotwork/constructors.hpp"
#include "knotwork/invariants.hpp"
#include "knotwork/moves.hpp"

using namespace knotwork;
using namespace kwtest;

namespace {

const SpatialDiagram& table(const std::string& name) {
  return KnotTable::instance().at(name).diagram;
}

SpatialDiagram unknot_loop() {
  SpatialDiagram d;
  d.family = {FamilyKind::Knot, 0, 0, 0};
  d.free_loops = {EdgeLabel{LabelFamily::X, 1}};
  return d;
}

SpatialDiagram renumbered(SpatialDiagram d) {
  renumber(d);
  return d;
}

std::map<MoveKind, int> kind_counts(const std::vector<Move>& moves) {
  std::map<MoveKind, int> out;
  for (const Move& m : moves) ++out[m.kind];
  return out;
}

std::vector<Move> moves_of_kind(const SpatialDiagram& d, int growth,
                                MoveKind kind, bool expand = true) {
  std::vector<Move> out;
  for (const Move& m : enumerate_moves(d, growth))
    if (m.kind == kind && (kind != MoveKind::VSlide || m.expand == expand))
      out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("R1 kinks every arc in four ways and undoes again") {
  const SpatialDiagram tre = renumbered(table("3_1"));
  const LaurentPoly vt = jones(tre);
  for (int a = 0; a < static_cast<int>(tre.arcs.size()); ++a) {
    for (int v = 0; v < 4; ++v) {
      const SpatialDiagram kinked = apply(tre, r1_up(a, v));
      CHECK(kinked.crossings.size() == 4);
      CHECK(validate(kinked).empty());
      CHECK(kinked.family == tre.family);
      // loop between slots v,v+1: negative twist for the under-strand pairs
      CHECK(writhe(kinked) == writhe(tre) + (v % 2 == 0 ? -1 : 1));
      CHECK(jones(kinked) == vt);

      const std::vector<Move> down =
          moves_of_kind(kinked, 0, MoveKind::R1Down);
      REQUIRE(down.size() == 1);
      CHECK(renumbered(apply(kinked, down[0])) == tre);
    }
  }
}

TEST_CASE("R1 kinks a free loop into the one-crossing unknot") {
  const SpatialDiagram flat = renumbered(unknot_loop());
  for (int v = 0; v < 4; ++v) {
    const SpatialDiagram kinked = apply(flat, r1_up_loop(0, v));
    CHECK(kinked.crossings.size() == 1);
    CHECK(kinked.arcs.size() == 2);
    CHECK(kinked.free_loops.empty());
    CHECK(writhe(kinked) == (v % 2 == 0 ? -1 : 1));
    CHECK(jones(kinked) == LaurentPoly::one());
    CHECK(renumbered(apply(kinked, r1_down(kinked.crossings[0].id))) == flat);
  }
  CHECK(canonical_encoding(apply(flat, r1_up_loop(0, 1))) ==
        canonical_encoding(positive_kink()));
}

TEST_CASE("R1 rejects invalid sites") {
  const SpatialDiagram tre = table("3_1");
  CHECK_THROWS_WITH_AS(apply(tre, r1_up(99, 0)),
                       "apply: R1+ arc index out of range", Error);
  CHECK_THROWS_WITH_AS(apply(tre, r1_up(0, 4)),
                       "apply: R1+ variant out of range", Error);
  CHECK_THROWS_WITH_AS(apply(tre, r1_up_loop(0, 0)),
                       "apply: R1+ free loop index out of range", Error);
  CHECK_THROWS_WITH_AS(apply(tre, r1_down(0)),
                       "apply: R1- crossing carries no kink loop", Error);
  CHECK_THROWS_WITH_AS(apply(tre, r1_down(42)),
                       "apply: R1- crossing not found", Error);
}

TEST_CASE("R2 pokes an arc over a face neighbour and pulls it back") {
  const SpatialDiagram th = renumbered(planar_theta());
  const Topology t(th);
  int pokes = 0;
  for (const auto& face : faces(th)) {
    for (std::size_t i = 0; i < face.size(); ++i) {
      for (std::size_t j = 0; j < face.size(); ++j) {
        if (i == j || t.arc_of.at(face[i]) == t.arc_of.at(face[j])) continue;
        ++pokes;
        const SpatialDiagram poked = apply(th, r2_up(face[i], face[j]));
        CHECK(poked.crossings.size() == 2);
        CHECK(validate(poked).empty());
        CHECK(poked.family == th.family);
        CHECK(edge_labels(poked) == edge_labels(th));

        const std::vector<Move> down =
            moves_of_kind(poked, 0, MoveKind::R2Down);
        REQUIRE(down.size() == 1);
        CHECK(renumbered(apply(poked, down[0])) == th);
      }
    }
  }
  CHECK(pokes == 6);  // three bigon faces, both over/under choices
}

TEST_CASE("R2 round trips on a knot and keeps jones") {
  const SpatialDiagram tre = renumbered(table("3_1"));
  const Topology t(tre);
  const auto fs = faces(tre);
  int pairs = 0;
  for (const auto& face : fs) {
    for (std::size_t i = 0; i < face.size(); ++i) {
      for (std::size_t j = 0; j < face.size(); ++j) {
        if (i == j || t.arc_of.at(face[i]) == t.arc_of.at(face[j])) continue;
        ++pairs;
        const SpatialDiagram poked = apply(tre, r2_up(face[i], face[j]));
        CHECK(poked.crossings.size() == 5);
        CHECK(jones(poked) == jones(tre));
        bool restored = false;
        for (const Move& m : moves_of_kind(poked, 0, MoveKind::R2Down))
          if (renumbered(apply(poked, m)) == tre) restored = true;
        CHECK(restored);
      }
    }
  }
  CHECK(pairs == 18);
}

TEST_CASE("R2 rejects clasped bigons and mismatched sites") {
  const SpatialDiagram tre = renumbered(table("3_1"));
  // The minimal alternating trefoil admits no shrinking or sliding move at
  // all: its bigons are clasped and its triangles cyclic.
  CHECK(enumerate_moves(tre, 0).empty());
  const Topology t(tre);
  for (const auto& face : faces(tre)) {
    if (face.size() != 2) continue;
    CHECK_THROWS_WITH_AS(apply(tre, r2_down(face[0])),
                         "apply: R2- bigon is clasped, not removable", Error);
  }
  for (const auto& face : faces(tre)) {
    if (face.size() != 3) continue;
    CHECK_THROWS_WITH_AS(apply(tre, r2_down(face[0])),
                         "apply: R2- needs a bigon face", Error);
  }
  // same arc twice
  const SpatialDiagram th = planar_theta();
  const Topology tt(th);
  const auto fs = faces(th);
  CHECK_THROWS_WITH_AS(apply(th, r2_up(fs[0][0], tt.mate(fs[0][0]))),
                       "apply: R2+ needs two distinct arcs", Error);
  // half-edges on different faces
  bool threw = false;
  for (const auto& face : fs)
    for (HalfEdge h : face)
      if (tt.arc_of.at(h) != tt.arc_of.at(fs[0][0]) &&
          std::find(fs[0].begin(), fs[0].end(), h) == fs[0].end()) {
        try {
          apply(th, r2_up(fs[0][0], h));
        } catch (const Error& e) {
          threw = std::string(e.what()) ==
                  "apply: R2+ half-edges do not depart one face";
        }
      }
  CHECK(threw);
}

TEST_CASE("R3 slides a strand across a crossing") {
  const SpatialDiagram tre = renumbered(table("3_1"));
  const auto fs = faces(tre);
  int slides = 0;
  for (const auto& face : fs) {
    if (face.size() != 3) continue;
    for (int i = 0; i < 3; ++i) {
      // poking a triangle side over the previous one opens an R3 triangle
      const SpatialDiagram poked = apply(tre, r2_up(face[i], face[(i + 2) % 3]));
      const std::vector<Move> sites = moves_of_kind(poked, 0, MoveKind::R3);
      REQUIRE(sites.size() == 1);
      const SpatialDiagram slid = apply(poked, sites[0]);
      ++slides;
      CHECK(slid.crossings.size() == poked.crossings.size());
      CHECK(validate(slid).empty());
      CHECK(kauffman_bracket(slid) == kauffman_bracket(poked));
      CHECK(jones(slid) == jones(tre));
      // deterministic: same move, same result
      CHECK(canonical_encoding(apply(poked, sites[0])) ==
            canonical_encoding(slid));
      // a reverse slide restores the poked diagram
      bool restored = false;
      for (const Move& m : moves_of_kind(slid, 0, MoveKind::R3))
        if (canonical_encoding(apply(slid, m)) == canonical_encoding(poked))
          restored = true;
      CHECK(restored);
    }
  }
  CHECK(slides == 6);
  CHECK_THROWS_WITH_AS(apply(tre, r3(faces(tre)[0][0])),
                       "apply: R3 triangle has no strand over the other two",
                       Error);
}

TEST_CASE("V-slide wraps an edge end around its node and back") {
  const SpatialDiagram unknot = table("unknot");
  // degree 3 (theta), degree 2 (2-theta) and degree 4 (4-theta) nodes
  const std::vector<SpatialDiagram> hosts = {
      renumbered(planar_theta()),
      renumbered(build_theta_n(1, unknot, unknot)),
      renumbered(build_theta_n(2, unknot, unknot))};
  for (const SpatialDiagram& g : hosts) {
    for (const GraphNode& node : g.nodes) {
      const int deg = static_cast<int>(node.rot.size());
      for (int pos = 0; pos < deg; ++pos) {
        for (bool over : {true, false}) {
          const SpatialDiagram w = apply(g, v_slide(node.id, pos, over, true));
          CHECK(static_cast<int>(w.crossings.size()) == deg - 1);
          CHECK(validate(w).empty());
          CHECK(w.family == g.family);
          CHECK(edge_labels(w) == edge_labels(g));

          const std::vector<Move> down =
              moves_of_kind(w, 0, MoveKind::VSlide, false);
          REQUIRE(down.size() == 1);
          CHECK(renumbered(apply(w, down[0])) == g);
        }
      }
    }
  }
}

TEST_CASE("V-slide crosses each other edge exactly once") {
  const SpatialDiagram th = renumbered(planar_theta());
  const Topology t(th);
  const GraphNode& node = th.nodes[0];
  const EdgeLabel slid = t.label_at(node.rot[0]);
  const SpatialDiagram w = apply(th, v_slide(node.id, 0, true, true));
  const auto matrix = crossing_matrix(w);
  for (const EdgeLabel& a : edge_labels(th))
    for (const EdgeLabel& b : edge_labels(th)) {
      const int expected = (a != b && (a == slid || b == slid)) ? 1 : 0;
      CHECK(matrix.at(a).at(b) == expected);
    }
}

TEST_CASE("V-slide rejects invalid sites") {
  const SpatialDiagram th = planar_theta();
  CHECK_THROWS_WITH_AS(apply(th, v_slide(7, 0, true, true)),
                       "apply: V-slide node not found", Error);
  CHECK_THROWS_WITH_AS(apply(th, v_slide(0, 3, true, true)),
                       "apply: V-slide rotation position out of range", Error);
  CHECK_THROWS_WITH_AS(apply(th, v_slide(0, 0, true, false)),
                       "apply: V-slide unwrap site does not match a wrap",
                       Error);
  // a bouquet: both edges loop at the single node, so nothing can wrap
  SpatialDiagram bouquet;
  bouquet.nodes.push_back({0, {0, 1, 2, 3}});
  bouquet.arcs = {{0, 1}, {2, 3}};
  bouquet.arc_label = {EdgeLabel{LabelFamily::X, 1},
                       EdgeLabel{LabelFamily::X, 2}};
  REQUIRE(validate(bouquet).empty());
  CHECK_THROWS_WITH_AS(apply(bouquet, v_slide(0, 0, true, true)),
                       "apply: V-slide cannot wrap an edge looping at its node",
                       Error);
}

TEST_CASE("enumerate_moves is gated by growth and fully deterministic") {
  const SpatialDiagram tre = renumbered(table("3_1"));
  CHECK(enumerate_moves(tre, 0).empty());
  auto counts = kind_counts(enumerate_moves(tre, 1));
  CHECK(counts[MoveKind::R1Up] == 24);  // six arcs, four variants
  CHECK(counts.size() == 1);
  counts = kind_counts(enumerate_moves(tre, 2));
  CHECK(counts[MoveKind::R1Up] == 24);
  CHECK(counts[MoveKind::R2Up] == 18);
  CHECK(counts.size() == 2);

  const SpatialDiagram th = renumbered(planar_theta());
  CHECK(enumerate_moves(th, 0).empty());
  counts = kind_counts(enumerate_moves(th, 1));
  CHECK(counts[MoveKind::R1Up] == 12);
  CHECK(counts.size() == 1);
  counts = kind_counts(enumerate_moves(th, 2));
  CHECK(counts[MoveKind::R1Up] == 12);
  CHECK(counts[MoveKind::R2Up] == 6);
  CHECK(counts[MoveKind::VSlide] == 12);  // two nodes x three ends x over/under

  const std::vector<Move> once = enumerate_moves(tre, 2);
  const std::vector<Move> twice = enumerate_moves(tre, 2);
  REQUIRE(once.size() == twice.size());
  for (std::size_t i = 0; i < once.size(); ++i)
    CHECK(once[i].str() == twice[i].str());
  CHECK(once[0].str() == "R1+(arc 0, v0)");
}

TEST_CASE("scramble is seeded, growing and type-preserving") {
  const SpatialDiagram flat = unknot_loop();
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
    const SpatialDiagram s = scramble(flat, 6, seed);
    CHECK(validate(s).empty());
    CHECK(s.crossings.size() >= 6);
    CHECK(s.crossings.size() <= 12);
    CHECK(s.family == flat.family);
    CHECK(jones(s) == LaurentPoly::one());
    CHECK(canonical_encoding(scramble(flat, 6, seed)) ==
          canonical_encoding(s));
  }
  const SpatialDiagram th2 = build_theta_n(2, table("unknot"), table("unknot"));
  const SpatialDiagram s = scramble(th2, 5, 11);
  CHECK(validate(s).empty());
  CHECK(s.family == th2.family);
  CHECK(edge_labels(s) == edge_labels(th2));
}

TEST_CASE("jones survives random move sequences over the corpus") {
  std::vector<std::pair<std::string, SpatialDiagram>> corpus;
  for (const std::string& name : {"3_1", "4_1", "5_1", "5_2", "3_1m"})
    corpus.push_back({name, table(name)});
  corpus.push_back({"3_1#4_1", connected_sum(table("3_1"), table("4_1"))});
  int checked = 0;
  for (const auto& [name, base] : corpus) {
    const LaurentPoly expected = jones(base);
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
      const SpatialDiagram moved = scramble(base, 3, seed);
      CHECK_MESSAGE(jones(moved) == expected, name, " seed ", seed);
      ++checked;
    }
  }
  CHECK(checked == 18);
  // one deeper excursion
  const SpatialDiagram deep = scramble(table("4_1"), 5, 9);
  CHECK(deep.crossings.size() >= 9);
  CHECK(jones(deep) == jones(table("4_1")));
}

TEST_CASE("simplify recovers the unknot from scrambled diagrams") {
  const SpatialDiagram flat = renumbered(unknot_loop());
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
    const SpatialDiagram s = scramble(flat, 6, seed);
    REQUIRE(s.crossings.size() <= 10);  // the frozen seeds stay small
    const SearchResult res = simplify(s, 20000, 2);
    CHECK(res.best_crossings == 0);
    CHECK(res.best.crossings.empty());
    CHECK(res.best.free_loops.size() == 1);
    CHECK(!res.exhausted);
    CHECK(res.explored <= 20000);
    REQUIRE(!res.trace.empty());
    // the trace replays from the input to the reported diagram
    SpatialDiagram replay = renumbered(s);
    for (const Move& m : res.trace) replay = apply(replay, m);
    CHECK(canonical_encoding(replay) == canonical_encoding(res.best));
    CHECK(canonical_encoding(res.best) == canonical_encoding(flat));
  }
}

TEST_CASE("simplify undoes six random moves on planar graphs") {
  const SpatialDiagram unknot = table("unknot");
  const std::vector<SpatialDiagram> hosts = {
      renumbered(planar_theta()),
      renumbered(build_theta_n(2, unknot, unknot))};
  std::uint64_t seed = 21;
  for (const SpatialDiagram& g : hosts) {
    const SpatialDiagram s = scramble(g, 6, seed++);
    CHECK(s.crossings.size() >= 6);
    const SearchResult res = simplify(s, 20000, 3);
    CHECK(res.best_crossings == 0);
    CHECK(res.best.family == g.family);
    CHECK(canonical_encoding(res.best) == canonical_encoding(g));
  }
}

TEST_CASE("simplify at depth zero reports the trefoil bound of three") {
  const SearchResult res = simplify(table("3_1"), 20000, 0);
  CHECK(res.best_crossings == 3);
  CHECK(res.trace.empty());
  CHECK(res.explored == 1);
  CHECK(!res.exhausted);  // the whole depth-0 move graph was covered

  const SearchResult rerun = simplify(table("3_1"), 20000, 0);
  CHECK(canonical_encoding(rerun.best) == canonical_encoding(res.best));
  CHECK(rerun.explored == res.explored);
}

TEST_CASE("simplify flags an exhausted budget") {
  const SpatialDiagram s = scramble(unknot_loop(), 6, 1);
  const SearchResult res = simplify(s, 3, 2);
  CHECK(res.exhausted);
  CHECK(res.explored == 1);  // the node budget ran out inside the first fan-out
  CHECK(res.best_crossings <=
        static_cast<int>(s.crossings.size()));  // upper bound semantics

  const SearchResult none = simplify(s, 0, 2);
  CHECK(none.exhausted);
  CHECK(none.explored == 0);
  CHECK(none.best_crossings == static_cast<int>(s.crossings.size()));
}

TEST_CASE("simplify is deterministic move for move") {
  const SpatialDiagram s = scramble(unknot_loop(), 6, 3);
  const SearchResult a = simplify(s, 20000, 2);
  const SearchResult b = simplify(s, 20000, 2);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i)
    CHECK(a.trace[i].str() == b.trace[i].str());
  CHECK(a.explored == b.explored);
  CHECK(canonical_encoding(a.best) == canonical_encoding(b.best));
}
