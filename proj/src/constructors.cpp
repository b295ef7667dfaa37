#include "knotwork/constructors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "knotwork/gauss.hpp"
#include "knotwork/invariants.hpp"
#include "knotwork/sgd_io.hpp"

namespace knotwork {

namespace {

void require_knot_diagram(const SpatialDiagram& d, const std::string& where) {
  require_valid(d, where);
  if (!d.nodes.empty()) throw Error(where + " requires a knot diagram");
  const std::size_t strands = strand_circuits(d).size() + d.free_loops.size();
  if (strands != 1) {
    throw Error(where + " requires a single-component knot diagram");
  }
}

// The loose ends of the 1-string tangle obtained by cutting a knot diagram at
// its strand-walk start: the arc leaving the lowest crossing's under-strand is
// removed, `exit_end` staying on that crossing and `entry_end` on its mate.
struct TangleCut {
  HalfEdge exit_end = -1;
  HalfEdge entry_end = -1;
};

TangleCut tangle_cut(const SpatialDiagram& knot) {
  Topology t(knot);
  const Crossing& low = *std::min_element(
      knot.crossings.begin(), knot.crossings.end(),
      [](const Crossing& a, const Crossing& b) { return a.id < b.id; });
  TangleCut cut;
  cut.exit_end = low.slot[2];
  cut.entry_end = t.mate(cut.exit_end);
  return cut;
}

void append_crossings(SpatialDiagram& dst, const SpatialDiagram& src, int cid0,
                      HalfEdge h0) {
  for (const Crossing& c : src.crossings) {
    Crossing nc;
    nc.id = c.id + cid0;
    for (int s = 0; s < 4; ++s) nc.slot[s] = c.slot[s] + h0;
    dst.crossings.push_back(nc);
  }
}

EdgeLabel xlabel(int index) { return EdgeLabel{LabelFamily::X, index}; }
EdgeLabel zlabel(int index) { return EdgeLabel{LabelFamily::Z, index}; }
EdgeLabel hlabel(int index) { return EdgeLabel{LabelFamily::H, index}; }

}  // namespace

SpatialDiagram resolve_knot_spec(const KnotSpec& spec) {
  if (const TableEntry* e = KnotTable::instance().find(spec.text)) {
    return e->diagram;
  }
  if (spec.text.ends_with(".sgd")) {
    SpatialDiagram d = load_sgd(spec.text);
    require_knot_diagram(d, "resolve_knot_spec");
    return d;
  }
  throw Error("unknown knot spec '" + spec.text +
              "' (expected a table name or an .sgd path)");
}

void tie_into_edge(SpatialDiagram& d, const EdgeLabel& edge,
                   const SpatialDiagram& knot) {
  require_knot_diagram(knot, "tie_into_edge");
  if (knot.crossings.empty()) return;  // unknot tangle: nothing to splice

  Topology t(d);
  const GraphNode* src = nullptr;
  HalfEdge stub = -1;
  for (const auto& node : d.nodes) {
    for (HalfEdge h : node.rot) {
      if (t.label_at(h) == edge) {
        if (!src || node.id < src->id) {
          src = &node;
          stub = h;
        }
        break;
      }
    }
  }
  if (!src) {
    throw Error("tie_into_edge: no node stub carries edge " + edge.str());
  }
  const int ai = t.arc_of.at(stub);
  const HalfEdge u = stub;
  const HalfEdge v =
      d.arcs[ai].first == u ? d.arcs[ai].second : d.arcs[ai].first;

  const int cid0 = d.fresh_crossing_id();
  const HalfEdge h0 = d.fresh_half_edge();
  const TangleCut cut = tangle_cut(knot);
  append_crossings(d, knot, cid0, h0);
  for (std::size_t i = 0; i < knot.arcs.size(); ++i) {
    const auto [p, q] = knot.arcs[i];
    const bool is_cut = (p == cut.exit_end && q == cut.entry_end) ||
                        (p == cut.entry_end && q == cut.exit_end);
    if (is_cut) continue;
    d.arcs.push_back({p + h0, q + h0});
    d.arc_label.push_back(edge);
  }
  d.arcs[ai] = {u, cut.exit_end + h0};
  d.arcs.push_back({cut.entry_end + h0, v});
  d.arc_label.push_back(edge);
}

SpatialDiagram connected_sum(const SpatialDiagram& a, const SpatialDiagram& b) {
  require_knot_diagram(a, "connected_sum");
  require_knot_diagram(b, "connected_sum");
  if (b.crossings.empty()) {
    SpatialDiagram out = a;
    out.family = Family{FamilyKind::Knot, 0, 0, 0};
    return out;
  }
  if (a.crossings.empty()) {
    SpatialDiagram out = b;
    const EdgeLabel la = a.free_loops.at(0);
    for (EdgeLabel& l : out.arc_label) l = la;
    out.family = Family{FamilyKind::Knot, 0, 0, 0};
    renumber(out);
    return out;
  }
  SpatialDiagram out = a;
  const TangleCut ca = tangle_cut(a);
  const TangleCut cb = tangle_cut(b);
  Topology ta(a);
  const int ia = ta.arc_of.at(ca.exit_end);
  const EdgeLabel la = out.arc_label[ia];
  const int cid0 = out.fresh_crossing_id();
  const HalfEdge h0 = out.fresh_half_edge();
  append_crossings(out, b, cid0, h0);
  for (std::size_t i = 0; i < b.arcs.size(); ++i) {
    const auto [p, q] = b.arcs[i];
    const bool is_cut = (p == cb.exit_end && q == cb.entry_end) ||
                        (p == cb.entry_end && q == cb.exit_end);
    if (is_cut) continue;
    out.arcs.push_back({p + h0, q + h0});
    out.arc_label.push_back(la);
  }
  out.arcs[ia] = {ca.exit_end, cb.entry_end + h0};
  out.arcs.push_back({cb.exit_end + h0, ca.entry_end});
  out.arc_label.push_back(la);
  out.family = Family{FamilyKind::Knot, 0, 0, 0};
  renumber(out);
  require_valid(out, "connected_sum");
  return out;
}

SpatialDiagram build_theta(const SpatialDiagram& k1, const SpatialDiagram& k2) {
  SpatialDiagram d;
  d.nodes.push_back({0, {4, 2, 0}});
  d.nodes.push_back({1, {1, 3, 5}});
  d.arcs = {{0, 1}, {2, 3}, {4, 5}};
  d.arc_label = {xlabel(1), EdgeLabel{LabelFamily::Y, 1}, zlabel(1)};
  d.family = Family{FamilyKind::Theta, 0, 0, 0};
  tie_into_edge(d, xlabel(1), k1);
  tie_into_edge(d, zlabel(1), k2);
  renumber(d);
  require_valid(d, "build_theta");
  return d;
}

SpatialDiagram build_theta_n(int n, const SpatialDiagram& k1,
                             const SpatialDiagram& k2) {
  if (n < 1) throw Error("build_theta_n: n must be at least 1");
  SpatialDiagram d;
  GraphNode source{0, {}};
  GraphNode sink{1, {}};
  for (int m = 2 * n - 1; m >= 0; --m) source.rot.push_back(2 * m);
  for (int m = 0; m < 2 * n; ++m) sink.rot.push_back(2 * m + 1);
  d.nodes = {source, sink};
  for (int m = 0; m < 2 * n; ++m) {
    d.arcs.push_back({2 * m, 2 * m + 1});
    d.arc_label.push_back(m < n ? xlabel(m + 1) : zlabel(m - n + 1));
  }
  d.family = Family{FamilyKind::ThetaN, n, 0, 0};
  for (int i = 1; i <= n; ++i) tie_into_edge(d, xlabel(i), k1);
  for (int i = 1; i <= n; ++i) tie_into_edge(d, zlabel(i), k2);
  renumber(d);
  require_valid(d, "build_theta_n");
  return d;
}

namespace {

using ChordList = std::vector<std::pair<HalfEdge, HalfEdge>>;
using EdgeEnds = std::map<EdgeLabel, std::array<HalfEdge, 2>>;

// Pair up node stubs by walking the strand: each arrival at a node connects to
// the nearest unused stub scanning clockwise or counterclockwise. The starting
// stub stays reserved for the final closure. Returns nothing when the scan
// runs dry before every stub is used.
std::optional<ChordList> walk_chords(const Topology& t, const GraphNode& na,
                                     const GraphNode& nb, const EdgeEnds& ends,
                                     bool cw_at_a, bool cw_at_b,
                                     int start_index) {
  const int deg = static_cast<int>(na.rot.size());
  const HalfEdge start = na.rot[start_index];
  std::set<HalfEdge> used{start};
  ChordList chords;
  int side = 1;  // the strand leaves na and arrives at nb first
  HalfEdge arrive = ends.at(t.label_at(start))[1];
  for (int step = 0; step < deg; ++step) {
    HalfEdge chosen = -1;
    if (step == deg - 1) {
      chosen = start;  // everything else is used; close up the strand
    } else {
      const GraphNode& node = side ? nb : na;
      const bool cw = side ? cw_at_b : cw_at_a;
      const auto it = std::find(node.rot.begin(), node.rot.end(), arrive);
      const int pos = static_cast<int>(it - node.rot.begin());
      for (int off = 1; off < deg; ++off) {
        const int p = ((cw ? pos - off : pos + off) % deg + deg) % deg;
        const HalfEdge cand = node.rot[p];
        if (cand == arrive || used.count(cand)) continue;
        chosen = cand;
        break;
      }
      if (chosen < 0) return std::nullopt;
    }
    used.insert(arrive);
    used.insert(chosen);
    chords.emplace_back(arrive, chosen);
    if (step == deg - 1) break;
    side ^= 1;
    arrive = ends.at(t.label_at(chosen))[side];
  }
  return chords;
}

// Remove both nodes, connecting their stubs pairwise as the chords dictate.
// Arc chains merge (smallest label wins); all-stub cycles become free loops.
SpatialDiagram apply_chords(const SpatialDiagram& d, const ChordList& chords) {
  SpatialDiagram out;
  out.crossings = d.crossings;
  out.free_loops = d.free_loops;
  out.family = Family{FamilyKind::Knot, 0, 0, 0};

  std::map<HalfEdge, HalfEdge> link;
  for (const auto& [a, b] : chords) {
    link[a] = b;
    link[b] = a;
  }
  std::map<HalfEdge, std::pair<HalfEdge, EdgeLabel>> arc_to;
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    arc_to[d.arcs[i].first] = {d.arcs[i].second, d.arc_label[i]};
    arc_to[d.arcs[i].second] = {d.arcs[i].first, d.arc_label[i]};
  }
  std::set<HalfEdge> done;
  for (const auto& [p, q] : d.arcs) {
    for (const HalfEdge anchor : {p, q}) {
      if (link.count(anchor) || done.count(anchor)) continue;
      done.insert(anchor);
      auto [cur, lab] = arc_to.at(anchor);
      while (link.count(cur)) {
        done.insert(cur);
        const HalfEdge hop = link.at(cur);
        done.insert(hop);
        const auto& [nxt, l2] = arc_to.at(hop);
        lab = std::min(lab, l2);
        cur = nxt;
      }
      done.insert(cur);
      out.arcs.push_back({anchor, cur});
      out.arc_label.push_back(lab);
    }
  }
  for (const auto& [p, q] : d.arcs) {
    (void)q;
    if (!link.count(p) || done.count(p)) continue;
    EdgeLabel lab = arc_to.at(p).second;
    HalfEdge cur = p;
    do {
      done.insert(cur);
      const auto& [other, l2] = arc_to.at(cur);
      lab = std::min(lab, l2);
      done.insert(other);
      cur = link.at(other);
    } while (cur != p);
    out.free_loops.push_back(lab);
  }
  // The surviving strand is a single edge of the result; give it one name.
  if (!out.arc_label.empty()) {
    const EdgeLabel unified =
        *std::min_element(out.arc_label.begin(), out.arc_label.end());
    for (EdgeLabel& l : out.arc_label) l = unified;
  }
  renumber(out);
  return out;
}

// All non-crossing perfect matchings of the cyclic stub order: the first stub
// pairs with a stub at odd distance, splitting the rest into two independent
// sides.
void enumerate_matchings(const std::vector<HalfEdge>& rot, ChordList acc,
                         std::vector<ChordList>& out) {
  if (rot.empty()) {
    out.push_back(std::move(acc));
    return;
  }
  for (std::size_t j = 1; j < rot.size(); j += 2) {
    ChordList next = acc;
    next.emplace_back(rot[0], rot[j]);
    const std::vector<HalfEdge> inside(rot.begin() + 1, rot.begin() + j);
    const std::vector<HalfEdge> outside(rot.begin() + j + 1, rot.end());
    std::vector<ChordList> inner;
    enumerate_matchings(inside, {}, inner);
    for (const ChordList& in_match : inner) {
      ChordList with_inner = next;
      with_inner.insert(with_inner.end(), in_match.begin(), in_match.end());
      enumerate_matchings(outside, with_inner, out);
    }
  }
}

}  // namespace

SpatialDiagram resolve_nodes(const SpatialDiagram& d) {
  require_valid(d, "resolve_nodes");
  if (d.nodes.size() != 2) {
    throw Error("resolve_nodes requires exactly two nodes");
  }
  const GraphNode& na =
      d.nodes[0].id < d.nodes[1].id ? d.nodes[0] : d.nodes[1];
  const GraphNode& nb =
      d.nodes[0].id < d.nodes[1].id ? d.nodes[1] : d.nodes[0];
  if (na.rot.size() != nb.rot.size()) {
    throw Error("resolve_nodes: node valences unequal");
  }
  if (na.rot.size() % 2) {
    throw Error("resolve_nodes: node valence must be even");
  }
  const int deg = static_cast<int>(na.rot.size());

  Topology t(d);
  std::map<EdgeLabel, HalfEdge> at_a, at_b;
  for (HalfEdge h : na.rot) {
    if (!at_a.emplace(t.label_at(h), h).second) {
      throw Error("resolve_nodes: an edge meets a node twice");
    }
  }
  for (HalfEdge h : nb.rot) {
    if (!at_b.emplace(t.label_at(h), h).second) {
      throw Error("resolve_nodes: an edge meets a node twice");
    }
  }
  EdgeEnds ends;
  for (const auto& [label, ha] : at_a) {
    const auto it = at_b.find(label);
    if (it == at_b.end()) {
      throw Error("resolve_nodes requires every edge to join the two nodes (" +
                  label.str() + " does not)");
    }
    ends[label] = {ha, it->second};
  }

  const auto try_chords =
      [&](const ChordList& chords) -> std::optional<SpatialDiagram> {
    SpatialDiagram out = apply_chords(d, chords);
    if (!validate(out).empty()) return std::nullopt;
    if (strand_circuits(out).size() + out.free_loops.size() != 1) {
      return std::nullopt;
    }
    return out;
  };

  // Preferred chirality first (clockwise at the source node, counterclockwise
  // at the sink), then the other combinations and every starting stub.
  const std::array<std::pair<bool, bool>, 4> dirs{
      {{true, false}, {false, true}, {true, true}, {false, false}}};
  for (const auto& [cwa, cwb] : dirs) {
    for (int start = 0; start < deg; ++start) {
      const auto chords = walk_chords(t, na, nb, ends, cwa, cwb, start);
      if (!chords) continue;
      if (auto out = try_chords(*chords)) return *out;
    }
  }
  // Exhaustive fallback over non-crossing matchings at both nodes.
  std::vector<ChordList> ma, mb;
  enumerate_matchings(na.rot, {}, ma);
  enumerate_matchings(nb.rot, {}, mb);
  for (const ChordList& camatch : ma) {
    for (const ChordList& cbmatch : mb) {
      ChordList chords = camatch;
      chords.insert(chords.end(), cbmatch.begin(), cbmatch.end());
      if (auto out = try_chords(chords)) return *out;
    }
  }
  throw Error(
      "resolve_nodes: no crossing-free resolution closes into one strand — "
      "inspect diagram validity");
}

namespace {

// Everything double_diagram needs about one original crossing.
struct ClusterInfo {
  int under_q = -1;  // walk position of the under-passage
  int over_q = -1;
  int u_in = -1;  // entry slots
  int o_in = -1;
  bool case_a = false;  // over-strand enters one slot counterclockwise of under
};

}  // namespace

SpatialDiagram double_diagram(const SpatialDiagram& k, int n) {
  if (n < 1) throw Error("double_diagram: n must be at least 1");
  require_knot_diagram(k, "double_diagram");
  if (n == 1) return k;
  const GaussCode code = gauss_code(k);
  const auto part = find_partition(code);
  if (!part) throw Error("both-alternating obstruction");
  const auto walk = strand_walk(k);
  const int L = static_cast<int>(walk.size());
  const int p1 = part->first;
  const int p2 = part->second;

  std::vector<int> cids;
  for (const Crossing& c : k.crossings) cids.push_back(c.id);
  std::sort(cids.begin(), cids.end());
  std::map<int, int> cluster_index;
  for (std::size_t i = 0; i < cids.size(); ++i) cluster_index[cids[i]] = int(i);
  const int C = static_cast<int>(cids.size());

  std::map<int, ClusterInfo> info;
  for (int q = 0; q < L; ++q) {
    ClusterInfo& ci = info[walk[q].crossing];
    if (walk[q].entry_pos % 2 == 0) {
      ci.under_q = q;
      ci.u_in = walk[q].entry_pos;
    } else {
      ci.over_q = q;
      ci.o_in = walk[q].entry_pos;
    }
  }
  for (auto& [id, ci] : info) {
    (void)id;
    ci.case_a = ci.o_in == (ci.u_in + 1) % 4;
  }

  const auto grid_cid = [&](int xidx, int i, int j) {
    return xidx * n * n + (i - 1) * n + (j - 1);
  };
  const auto gh = [](int cid, int s) { return HalfEdge(4 * cid + s); };

  const auto in_alpha1 = [&](int q) { return p1 <= q && q < p2; };
  const auto seg_label = [&](int q, int lane) {
    return in_alpha1(q) ? xlabel(lane) : zlabel(lane);
  };

  SpatialDiagram out;
  out.family = Family{FamilyKind::ThetaN, n, 0, 0};
  for (int x = 0; x < C; ++x) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const int cid = grid_cid(x, i, j);
        out.crossings.push_back(
            {cid, {gh(cid, 0), gh(cid, 1), gh(cid, 2), gh(cid, 3)}});
      }
    }
  }

  const auto add_arc = [&](HalfEdge a, HalfEdge b, EdgeLabel l) {
    out.arcs.push_back({a, b});
    out.arc_label.push_back(l);
  };

  // Lane arcs inside each cluster. Under-lanes run "south to north"; the
  // over-band crosses west or east depending on the crossing's chirality.
  for (int x = 0; x < C; ++x) {
    const ClusterInfo& ci = info.at(cids[x]);
    for (int j = 1; j <= n; ++j) {
      const EdgeLabel lu = seg_label(ci.under_q, j);
      if (ci.case_a) {
        for (int i = 1; i < n; ++i) {
          add_arc(gh(grid_cid(x, i, j), 2), gh(grid_cid(x, i + 1, j), 0), lu);
        }
      } else {
        for (int i = n; i > 1; --i) {
          add_arc(gh(grid_cid(x, i, j), 2), gh(grid_cid(x, i - 1, j), 0), lu);
        }
      }
    }
    for (int i = 1; i <= n; ++i) {
      const EdgeLabel lo = seg_label(ci.over_q, i);
      if (ci.case_a) {
        for (int j = n; j > 1; --j) {
          add_arc(gh(grid_cid(x, i, j), 3), gh(grid_cid(x, i, j - 1), 1), lo);
        }
      } else {
        for (int j = 1; j < n; ++j) {
          add_arc(gh(grid_cid(x, i, j), 1), gh(grid_cid(x, i, j + 1), 3), lo);
        }
      }
    }
  }

  // Cluster boundary stub for lane `c` of the band replacing half-edge `h`.
  Topology tk(k);
  const auto stub = [&](HalfEdge h, int c) -> HalfEdge {
    const auto& a = tk.attach(h);
    const int x = cluster_index.at(a.owner);
    const ClusterInfo& ci = info.at(a.owner);
    if (a.pos == ci.u_in) return gh(grid_cid(x, ci.case_a ? 1 : n, c), 0);
    if (a.pos == (ci.u_in + 2) % 4) {
      return gh(grid_cid(x, ci.case_a ? n : 1, c), 2);
    }
    if (a.pos == ci.o_in) {
      return ci.case_a ? gh(grid_cid(x, c, n), 1) : gh(grid_cid(x, c, 1), 3);
    }
    return ci.case_a ? gh(grid_cid(x, c, 1), 3) : gh(grid_cid(x, c, n), 1);
  };

  // Band arcs along each original arc; the two partition cuts become nodes.
  HalfEdge nstub = gh(grid_cid(C - 1, n, n), 3) + 1;
  for (int q = 0; q < L; ++q) {
    const HalfEdge he = walk[q].entry;
    const HalfEdge hx = tk.mate(he);
    const int qprev = (q + L - 1) % L;
    if (q == p1 || q == p2) {
      GraphNode node{q == p1 ? 0 : 1, {}};
      std::vector<HalfEdge> outs;
      for (int c = 1; c <= n; ++c) {
        const HalfEdge in_c = nstub++;
        add_arc(stub(hx, c), in_c, seg_label(qprev, c));
        node.rot.push_back(in_c);
      }
      for (int c = 1; c <= n; ++c) {
        const HalfEdge out_c = nstub++;
        add_arc(out_c, stub(he, c), seg_label(q, c));
        outs.push_back(out_c);
      }
      node.rot.insert(node.rot.end(), outs.rbegin(), outs.rend());
      out.nodes.push_back(node);
    } else {
      for (int c = 1; c <= n; ++c) {
        add_arc(stub(hx, c), stub(he, c), seg_label(q, c));
      }
    }
  }
  require_valid(out, "double_diagram");

  // Sign assignment: copies keep the original signs except one inter-strand
  // flip per same-family pair, placed in the cluster of the segment's first
  // self-crossing; a trivial constituent gets the further escape flip.
  const auto in_segment = [&](int q, int from, int to) {
    return from < to ? (from <= q && q < to) : (q >= from || q < to);
  };
  const auto first_self = [&](int from, int to) -> int {
    for (int q = from; q != to; q = (q + 1) % L) {
      const ClusterInfo& ci = info.at(walk[q].crossing);
      if (in_segment(ci.under_q, from, to) && in_segment(ci.over_q, from, to)) {
        return walk[q].crossing;
      }
    }
    return -1;
  };
  const auto flip = [&](int cid) {
    Crossing& c = *out.crossing_by_id(cid);
    c.slot = {c.slot[1], c.slot[2], c.slot[3], c.slot[0]};
  };
  const auto is_trivial = [&](const EdgeLabel& a, const EdgeLabel& b) {
    return jones_cached(constituent(out, a, b)) == LaurentPoly::one();
  };

  struct FamilyCuts {
    int cluster;
    LabelFamily fam;
  };
  const std::array<FamilyCuts, 2> fams{
      {{first_self(p1, p2), LabelFamily::X},
       {first_self(p2, p1), LabelFamily::Z}}};
  for (const auto& [cluster, fam] : fams) {
    if (cluster < 0) {
      throw Error("double_diagram: partition arc has no self-crossing — "
                  "inspect diagram validity");
    }
    const int x = cluster_index.at(cluster);
    for (int c1 = 1; c1 <= n; ++c1) {
      for (int c2 = c1 + 1; c2 <= n; ++c2) {
        const EdgeLabel la{fam, c1};
        const EdgeLabel lb{fam, c2};
        flip(grid_cid(x, c1, c2));
        if (!is_trivial(la, lb)) continue;
        flip(grid_cid(x, c2, c1));  // escape: reverse the clasp instead
        if (!is_trivial(la, lb)) continue;
        flip(grid_cid(x, c1, c2));  // mirror clasp as the last resort
        if (is_trivial(la, lb)) {
          throw Error(
              "double_diagram: same-family constituent stays trivial — "
              "inspect diagram validity");
        }
      }
    }
  }
  renumber(out);
  require_valid(out, "double_diagram");
  return out;
}

SpatialDiagram constituent(const SpatialDiagram& d, const EdgeLabel& a,
                           const EdgeLabel& b) {
  SpatialDiagram out = d;
  for (const EdgeLabel& l : edge_labels(d)) {
    if (l != a && l != b) delete_edge(out, l);
  }
  splice_valence2_nodes(out);
  relabel_edge(out, std::max(a, b), std::min(a, b));
  out.family = Family{FamilyKind::Knot, 0, 0, 0};
  renumber(out);
  return out;
}

OmegaReport check_omega_membership(const SpatialDiagram& d,
                                   const std::string& k1,
                                   const std::string& k2) {
  require_valid(d, "check_omega_membership");
  const auto normalized_sum = [](std::vector<std::string> factors) {
    std::erase(factors, std::string("unknot"));
    if (factors.empty()) return std::string("unknot");
    return sum_name(std::move(factors));
  };
  const std::string pair_target = normalized_sum({k1, k2});
  const std::string quad_target = normalized_sum({k1, k1, k2, k2});

  OmegaReport report;
  bool violated = false;
  bool unknown = false;
  const auto labels = edge_labels(d);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      const std::string name = identify(constituent(d, labels[i], labels[j]));
      report.pairs.push_back({labels[i], labels[j], name});
      if (labels[i].fam == labels[j].fam) {
        // Same-colour pairs must avoid the unknot and the double sum; a knot
        // outside the table has a Jones value distinct from both, which is
        // enough to rule them out.
        if (name == "unknot" || name == quad_target) violated = true;
      } else {
        if (name == "unknown") {
          unknown = true;
        } else if (name != pair_target) {
          violated = true;
        }
      }
    }
  }
  report.verdict = violated ? "non-member" : (unknown ? "unknown" : "member");
  return report;
}

SpatialDiagram theta_connected_sum(const SpatialDiagram& a,
                                   const SpatialDiagram& b) {
  require_valid(a, "theta_connected_sum");
  require_valid(b, "theta_connected_sum");
  if (a.nodes.size() != 2 || b.nodes.size() != 2) {
    throw Error("theta_connected_sum requires two-node diagrams");
  }
  const GraphNode& asink =
      a.nodes[0].id < a.nodes[1].id ? a.nodes[1] : a.nodes[0];
  const GraphNode& bsource =
      b.nodes[0].id < b.nodes[1].id ? b.nodes[0] : b.nodes[1];
  if (asink.rot.size() != bsource.rot.size()) {
    throw Error("theta_connected_sum: degree mismatch");
  }
  Topology ta(a);
  Topology tb(b);
  std::map<EdgeLabel, HalfEdge> astub, bstub;
  for (HalfEdge h : asink.rot) {
    if (!astub.emplace(ta.label_at(h), h).second) {
      throw Error("theta_connected_sum: an edge meets the glue node twice");
    }
  }
  for (HalfEdge h : bsource.rot) {
    if (!bstub.emplace(tb.label_at(h), h).second) {
      throw Error("theta_connected_sum: an edge meets the glue node twice");
    }
  }
  {
    std::vector<EdgeLabel> la, lb;
    for (const auto& [l, h] : astub) la.push_back(l), (void)h;
    for (const auto& [l, h] : bstub) lb.push_back(l), (void)h;
    if (la != lb) throw Error("theta_connected_sum: degree mismatch");
  }

  SpatialDiagram out = a;
  std::erase_if(out.nodes,
                [&](const GraphNode& nd) { return nd.id == asink.id; });
  const int nid0 = out.fresh_node_id();
  const int cid0 = out.fresh_crossing_id();
  const HalfEdge h0 = out.fresh_half_edge();
  append_crossings(out, b, cid0, h0);
  const GraphNode& bsink =
      b.nodes[0].id < b.nodes[1].id ? b.nodes[1] : b.nodes[0];
  GraphNode moved{nid0, {}};
  for (HalfEdge h : bsink.rot) moved.rot.push_back(h + h0);
  out.nodes.push_back(moved);

  // Remove the glue-stub arcs on both sides, joining their far ends.
  std::map<EdgeLabel, HalfEdge> a_far, b_far;
  std::set<int> drop_a;
  for (const auto& [l, h] : astub) {
    const int ai = ta.arc_of.at(h);
    drop_a.insert(ai);
    a_far[l] = a.arcs[ai].first == h ? a.arcs[ai].second : a.arcs[ai].first;
  }
  std::vector<std::pair<HalfEdge, HalfEdge>> arcs;
  std::vector<EdgeLabel> labels;
  for (std::size_t i = 0; i < out.arcs.size(); ++i) {
    if (drop_a.count(static_cast<int>(i))) continue;
    arcs.push_back(out.arcs[i]);
    labels.push_back(out.arc_label[i]);
  }
  std::set<int> drop_b;
  for (const auto& [l, h] : bstub) {
    const int bi = tb.arc_of.at(h);
    drop_b.insert(bi);
    b_far[l] = b.arcs[bi].first == h ? b.arcs[bi].second : b.arcs[bi].first;
  }
  for (std::size_t i = 0; i < b.arcs.size(); ++i) {
    if (drop_b.count(static_cast<int>(i))) continue;
    arcs.push_back({b.arcs[i].first + h0, b.arcs[i].second + h0});
    labels.push_back(b.arc_label[i]);
  }
  for (const auto& [l, far] : a_far) {
    arcs.push_back({far, b_far.at(l) + h0});
    labels.push_back(l);
  }
  out.arcs = std::move(arcs);
  out.arc_label = std::move(labels);
  for (const EdgeLabel& l : b.free_loops) out.free_loops.push_back(l);

  const int deg = static_cast<int>(asink.rot.size());
  out.family = deg == 3 ? Family{FamilyKind::Theta, 0, 0, 0}
                        : Family{FamilyKind::ThetaN, deg / 2, 0, 0};
  renumber(out);
  require_valid(out, "theta_connected_sum");
  return out;
}

namespace {

// Label scheme of the ladder: horizontal edge in row r (1-based from the top),
// column c carries x_{(c-1)*2n + r}; the vertical segment of wall i between
// rows r and r+1 carries h_{(i-1)*(2n-1) + r}.
struct LadderIndex {
  int rows;

  int xindex(int r, int c) const { return (c - 1) * rows + r; }
  int row_of(int xidx) const { return (xidx - 1) % rows + 1; }
  int col_of(int xidx) const { return (xidx - 1) / rows + 1; }
  int hindex(int i, int r) const { return (i - 1) * (rows - 1) + r; }
  int wall_of(int hidx) const { return (hidx - 1) / (rows - 1) + 1; }
};

}  // namespace

SpatialDiagram build_oplus(int n, int k, const SpatialDiagram& k1,
                           const SpatialDiagram& k2) {
  if (n < 1) throw Error("build_oplus: n must be at least 1");
  if (k < 0) throw Error("build_oplus: k must be non-negative");
  if (k == 0) return build_theta_n(n, k1, k2);

  const int rows = 2 * n;
  const int cols = k + 1;
  const LadderIndex idx{rows};
  SpatialDiagram d;
  // Half-edges: horizontal edge (r, c) gets a west and an east end; vertical
  // segment (i, r) a top and a bottom end.
  const auto hw = [&](int r, int c) {
    return HalfEdge(2 * ((c - 1) * rows + (r - 1)));
  };
  const auto he = [&](int r, int c) { return hw(r, c) + 1; };
  const HalfEdge v0 = HalfEdge(2 * rows * cols);
  const auto vt = [&](int i, int r) {
    return v0 + HalfEdge(2 * ((i - 1) * (rows - 1) + (r - 1)));
  };
  const auto vb = [&](int i, int r) { return vt(i, r) + 1; };

  for (int c = 1; c <= cols; ++c) {
    for (int r = 1; r <= rows; ++r) {
      d.arcs.push_back({hw(r, c), he(r, c)});
      d.arc_label.push_back(xlabel(idx.xindex(r, c)));
    }
  }
  for (int i = 1; i <= k; ++i) {
    for (int r = 1; r < rows; ++r) {
      d.arcs.push_back({vt(i, r), vb(i, r)});
      d.arc_label.push_back(hlabel(idx.hindex(i, r)));
    }
  }

  GraphNode west{0, {}};
  for (int r = rows; r >= 1; --r) west.rot.push_back(hw(r, 1));
  GraphNode east{1, {}};
  for (int r = 1; r <= rows; ++r) east.rot.push_back(he(r, cols));
  d.nodes = {west, east};
  for (int i = 1; i <= k; ++i) {
    for (int r = 1; r <= rows; ++r) {
      GraphNode node{2 + (i - 1) * rows + (r - 1), {}};
      const HalfEdge left = he(r, i);
      const HalfEdge right = hw(r, i + 1);
      if (r == 1) {
        node.rot = {right, left, vt(i, r)};
      } else if (r == rows) {
        node.rot = {right, vb(i, r - 1), left};
      } else {
        node.rot = {right, vb(i, r - 1), left, vt(i, r)};
      }
      d.nodes.push_back(node);
    }
  }
  d.family = Family{FamilyKind::Oplus, n, k, 0};
  require_valid(d, "build_oplus");

  for (int c = 1; c <= cols; ++c) {
    for (int r = 1; r <= rows; ++r) {
      tie_into_edge(d, xlabel(idx.xindex(r, c)), (r + c) % 2 ? k1 : k2);
    }
  }
  renumber(d);
  require_valid(d, "build_oplus");
  return d;
}

SpatialDiagram build_grid(int n, int k, int i, const SpatialDiagram& k1,
                          const SpatialDiagram& k2) {
  if (i < 1 || i > k) throw Error("build_grid: wall index out of range");
  SpatialDiagram d = build_oplus(n, k, k1, k2);
  const int rows = 2 * n;
  const LadderIndex idx{rows};

  // The wall's vertical segments meet no crossings, so deleting the edge just
  // drops node-to-node arcs. Only the wall's own nodes dissolve into their
  // rows afterwards; the poles and the other walls stay.
  std::set<int> wall_node_ids;
  std::set<HalfEdge> wall_stubs;
  {
    Topology t(d);
    std::vector<int> drop;
    for (std::size_t a = 0; a < d.arcs.size(); ++a) {
      const EdgeLabel l = d.arc_label[a];
      if (l.fam != LabelFamily::H || idx.wall_of(l.index) != i) continue;
      drop.push_back(static_cast<int>(a));
      for (HalfEdge h : {d.arcs[a].first, d.arcs[a].second}) {
        wall_node_ids.insert(t.attach(h).owner);
        wall_stubs.insert(h);
      }
    }
    for (auto it = drop.rbegin(); it != drop.rend(); ++it) {
      d.arcs.erase(d.arcs.begin() + *it);
      d.arc_label.erase(d.arc_label.begin() + *it);
    }
  }
  for (GraphNode& node : d.nodes) {
    if (!wall_node_ids.count(node.id)) continue;
    std::erase_if(node.rot,
                  [&](HalfEdge h) { return wall_stubs.count(h) > 0; });
  }
  for (int id : wall_node_ids) {
    const GraphNode* node = d.node_by_id(id);
    if (!node || node->rot.size() != 2) {
      throw Error("build_grid: malformed ladder wall");
    }
    Topology t(d);
    const int ia = t.arc_of.at(node->rot[0]);
    const int ib = t.arc_of.at(node->rot[1]);
    if (ia == ib) throw Error("build_grid: malformed ladder wall");
    const HalfEdge p = t.mate(node->rot[0]);
    const HalfEdge q = t.mate(node->rot[1]);
    const EdgeLabel l = std::min(d.arc_label[ia], d.arc_label[ib]);
    const int hi = std::max(ia, ib);
    const int lo = std::min(ia, ib);
    d.arcs.erase(d.arcs.begin() + hi);
    d.arc_label.erase(d.arc_label.begin() + hi);
    d.arcs.erase(d.arcs.begin() + lo);
    d.arc_label.erase(d.arc_label.begin() + lo);
    d.arcs.push_back({p, q});
    d.arc_label.push_back(l);
    std::erase_if(d.nodes, [&](const GraphNode& g) { return g.id == id; });
  }
  // Each row now runs straight through the gap; keep the west name.
  for (int r = 1; r <= rows; ++r) {
    relabel_edge(d, xlabel(idx.xindex(r, i + 1)), xlabel(idx.xindex(r, i)));
  }
  d.family = Family{FamilyKind::Grid, n, k, i};
  renumber(d);
  require_valid(d, "build_grid");
  return d;
}

std::pair<SpatialDiagram, SpatialDiagram> cut_vertical(const SpatialDiagram& d,
                                                       int i) {
  require_valid(d, "cut_vertical");
  if (d.family.kind != FamilyKind::Oplus) {
    throw Error("cut_vertical requires a ladder-family diagram");
  }
  const int n = d.family.n;
  const int k = d.family.k;
  const int rows = 2 * n;
  const LadderIndex idx{rows};
  if (i < 1 || i > k) throw Error("cut_vertical: wall index out of range");

  const auto matrix = crossing_matrix(d);
  for (int r = 1; r < rows; ++r) {
    const auto it = matrix.find(hlabel(idx.hindex(i, r)));
    if (it == matrix.end()) continue;
    for (const auto& [other, count] : it->second) {
      (void)other;
      if (count > 0) {
        throw Error("cut_vertical: vertical edge participates in crossings");
      }
    }
  }

  // Wall nodes, their west/east horizontal stubs, and their row order.
  Topology t(d);
  std::map<int, std::pair<HalfEdge, HalfEdge>> wall;  // row -> (west, east)
  std::set<int> wall_ids;
  for (const GraphNode& node : d.nodes) {
    bool on_wall = false;
    for (HalfEdge h : node.rot) {
      const EdgeLabel l = t.label_at(h);
      if (l.fam == LabelFamily::H && idx.wall_of(l.index) == i) on_wall = true;
    }
    if (!on_wall) continue;
    wall_ids.insert(node.id);
    int row = -1;
    HalfEdge wstub = -1, estub = -1;
    for (HalfEdge h : node.rot) {
      const EdgeLabel l = t.label_at(h);
      if (l.fam != LabelFamily::X) continue;
      row = idx.row_of(l.index);
      if (idx.col_of(l.index) == i) {
        wstub = h;
      } else if (idx.col_of(l.index) == i + 1) {
        estub = h;
      }
    }
    if (row < 0 || wstub < 0 || estub < 0) {
      throw Error("cut_vertical: malformed ladder wall");
    }
    wall[row] = {wstub, estub};
  }
  if (static_cast<int>(wall.size()) != rows) {
    throw Error("cut_vertical: malformed ladder wall");
  }

  SpatialDiagram west, east;
  west.family = Family{FamilyKind::Oplus, n, i - 1, 0};
  east.family = Family{FamilyKind::Oplus, n, k - i, 0};
  for (const Crossing& c : d.crossings) {
    const EdgeLabel l = t.label_at(c.slot[0]);
    if (l.fam != LabelFamily::X) {
      throw Error("cut_vertical: crossing off the horizontal edges");
    }
    (idx.col_of(l.index) <= i ? west : east).crossings.push_back(c);
  }
  for (const GraphNode& node : d.nodes) {
    if (wall_ids.count(node.id)) continue;
    bool west_side;
    if (node.rot.empty()) continue;
    const EdgeLabel l = t.label_at(node.rot[0]);
    if (l.fam == LabelFamily::X) {
      west_side = idx.col_of(l.index) <= i;
    } else {
      west_side = idx.wall_of(l.index) < i;
    }
    (west_side ? west : east).nodes.push_back(node);
  }
  for (std::size_t a = 0; a < d.arcs.size(); ++a) {
    const EdgeLabel l = d.arc_label[a];
    if (l.fam == LabelFamily::H && idx.wall_of(l.index) == i) continue;
    const bool west_side = l.fam == LabelFamily::X ? idx.col_of(l.index) <= i
                                                   : idx.wall_of(l.index) < i;
    SpatialDiagram& piece = west_side ? west : east;
    piece.arcs.push_back(d.arcs[a]);
    piece.arc_label.push_back(l);
  }

  // Fresh poles closing the cut: east pole of the west piece reads the wall's
  // west stubs top to bottom, west pole of the east piece bottom to top.
  GraphNode new_east{d.fresh_node_id(), {}};
  for (int r = 1; r <= rows; ++r) new_east.rot.push_back(wall.at(r).first);
  west.nodes.push_back(new_east);
  GraphNode new_west{d.fresh_node_id(), {}};
  for (int r = rows; r >= 1; --r) new_west.rot.push_back(wall.at(r).second);
  east.nodes.push_back(new_west);

  // Renormalize east-piece labels to columns 1..k+1-i and walls 1..k-i.
  for (EdgeLabel& l : east.arc_label) {
    if (l.fam == LabelFamily::X) {
      l.index -= i * rows;
    } else {
      l.index -= i * (rows - 1);
    }
  }
  renumber(west);
  renumber(east);
  require_valid(west, "cut_vertical");
  require_valid(east, "cut_vertical");
  if (west.crossings.size() + east.crossings.size() != d.crossings.size()) {
    throw Error("cut_vertical: crossings lost in the cut — inspect diagram "
                "validity");
  }
  return {west, east};
}

int recursion_parameter(int k, int i) {
  if (k < 1 || i < 1 || i > k) {
    throw Error("recursion_parameter: wall index out of range");
  }
  const int left = i - 1;
  const int right = k - i;
  if (left == right) {
    throw Error("recursion_parameter undefined for i = (k+1)/2");
  }
  return left < right ? i : i - right - 1;
}

}  // namespace knotwork
