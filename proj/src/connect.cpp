#include "knotwork/connect.hpp"

#include <algorithm>

namespace knotwork {

namespace {

void require_two_nodes_no_mixed_crossings(const SpatialDiagram& d,
                                          const std::string& where) {
  require_valid(d, where);
  if (d.nodes.size() != 2) {
    throw Error(where + " requires a diagram with exactly two nodes");
  }
  for (const auto& [a, row] : crossing_matrix(d)) {
    for (const auto& [b, count] : row) {
      if (a != b && count != 0) {
        throw Error(where + " requires crossing-free pairs of edges (" +
                    a.str() + " and " + b.str() + " cross " +
                    std::to_string(count) + " times)");
      }
    }
  }
}

}  // namespace

ArcPath connecting_arc(const SpatialDiagram& d) {
  require_two_nodes_no_mixed_crossings(d, "connecting_arc");
  const int n1 = std::min(d.nodes[0].id, d.nodes[1].id);
  const int n2 = std::max(d.nodes[0].id, d.nodes[1].id);
  Topology t(d);
  const auto fs = faces(d);
  for (std::size_t fi = 0; fi < fs.size(); ++fi) {
    HalfEdge c1 = -1, c2 = -1;
    for (HalfEdge h : fs[fi]) {
      const auto& a = t.attach(h);
      if (a.at_crossing) continue;
      if (a.owner == n1 && c1 < 0) c1 = h;
      if (a.owner == n2 && c2 < 0) c2 = h;
    }
    if (c1 >= 0 && c2 >= 0) return ArcPath{int(fi), c1, c2};
  }
  throw Error(
      "connecting_arc: no face touches both nodes; this contradicts the "
      "crossing-free connection argument — inspect diagram validity");
}

std::vector<SplitPiece> split_along(const SpatialDiagram& d,
                                    const ArcPath& path) {
  require_two_nodes_no_mixed_crossings(d, "split_along");
  Topology t(d);
  const auto sane = [&](HalfEdge h) {
    return t.at.count(h) && !t.attach(h).at_crossing;
  };
  if (path.face < 0 || !sane(path.corner_n1) || !sane(path.corner_n2)) {
    throw Error("split_along: path does not belong to this diagram");
  }

  std::vector<SplitPiece> out;
  for (const EdgeLabel& label : edge_labels(d)) {
    SpatialDiagram piece;
    piece.family = Family{FamilyKind::Knot, 0, 0, 0};
    for (const auto& c : d.crossings) {
      if (t.label_at(c.slot[0]) == label) piece.crossings.push_back(c);
    }
    // The one end of this edge at each node.
    std::array<HalfEdge, 2> stub{-1, -1};
    for (int ni = 0; ni < 2; ++ni) {
      for (HalfEdge h : d.nodes[ni].rot) {
        if (t.label_at(h) != label) continue;
        if (stub[ni] >= 0) {
          throw Error("split_along: edge " + label.str() +
                      " meets a node twice");
        }
        stub[ni] = h;
      }
    }
    if ((stub[0] < 0) != (stub[1] < 0)) {
      throw Error("split_along: edge " + label.str() +
                  " ends at only one node");
    }
    std::array<HalfEdge, 2> loose{-1, -1};
    bool closed_loop = stub[0] < 0;  // label only present as a free loop
    for (std::size_t ai = 0; ai < d.arcs.size(); ++ai) {
      if (d.arc_label[ai] != label) continue;
      const auto [u, v] = d.arcs[ai];
      const bool at0 = u == stub[0] || v == stub[0];
      const bool at1 = u == stub[1] || v == stub[1];
      if (at0 && at1) {
        closed_loop = true;  // single arc from node to node
      } else if (at0) {
        loose[0] = u == stub[0] ? v : u;
      } else if (at1) {
        loose[1] = u == stub[1] ? v : u;
      } else {
        piece.arcs.push_back(d.arcs[ai]);
        piece.arc_label.push_back(label);
      }
    }
    if (closed_loop) {
      piece.free_loops.push_back(label);
    } else if (loose[0] >= 0 && loose[1] >= 0) {
      piece.arcs.emplace_back(loose[0], loose[1]);
      piece.arc_label.push_back(label);
    } else if (stub[0] >= 0) {
      throw Error("split_along: edge " + label.str() + " has dangling arcs");
    }
    for (const EdgeLabel& fl : d.free_loops) {
      if (fl == label) piece.free_loops.push_back(fl);
    }
    renumber(piece);
    require_valid(piece, "split_along piece " + label.str());
    out.push_back(SplitPiece{label, std::move(piece)});
  }
  return out;
}

}  // namespace knotwork
