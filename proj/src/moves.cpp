#include "knotwork/moves.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace knotwork {

namespace {

int arc_index_of(const Topology& t, HalfEdge h) {
  auto it = t.arc_of.find(h);
  if (it == t.arc_of.end())
    throw Error("apply: no arc at half-edge " + std::to_string(h));
  return it->second;
}

// The slot diagonally across the same crossing: where the strand through h
// leaves the crossing.
HalfEdge across(const SpatialDiagram& d, const Topology& t, HalfEdge h) {
  const auto& a = t.attach(h);
  if (!a.at_crossing) throw Error("apply: half-edge not at a crossing");
  return d.crossing_by_id(a.owner)->slot[(a.pos + 2) % 4];
}

// Face orbit through the departing half-edge h.
std::vector<HalfEdge> face_from(const SpatialDiagram& d, const Topology& t,
                                HalfEdge h) {
  arc_index_of(t, h);
  std::vector<HalfEdge> orbit;
  const std::size_t cap = 2 * d.arcs.size() + 1;
  HalfEdge cur = h;
  do {
    orbit.push_back(cur);
    if (orbit.size() > cap) throw Error("apply: face walk does not close");
    cur = t.next_ccw(t.mate(cur));
  } while (cur != h);
  return orbit;
}

SpatialDiagram finished(SpatialDiagram out, const Family& fam) {
  out.family = fam;
  renumber(out);
  require_valid(out, "apply");
  return out;
}

// ---- R1 --------------------------------------------------------------------

SpatialDiagram apply_r1_up(const SpatialDiagram& d, const Move& m) {
  if (m.variant < 0 || m.variant > 3)
    throw Error("apply: R1+ variant out of range");
  SpatialDiagram out = d;
  const HalfEdge h0 = out.fresh_half_edge();
  Crossing c;
  c.id = out.fresh_crossing_id();
  c.slot = {h0, h0 + 1, h0 + 2, h0 + 3};
  const HalfEdge lv = c.slot[m.variant];
  const HalfEdge lw = c.slot[(m.variant + 1) % 4];
  const HalfEdge u = c.slot[(m.variant + 2) % 4];
  const HalfEdge w = c.slot[(m.variant + 3) % 4];
  if (m.arc >= 0) {
    if (m.arc >= static_cast<int>(out.arcs.size()))
      throw Error("apply: R1+ arc index out of range");
    const auto [p, q] = out.arcs[m.arc];
    const EdgeLabel label = out.arc_label[m.arc];
    out.arcs.erase(out.arcs.begin() + m.arc);
    out.arc_label.erase(out.arc_label.begin() + m.arc);
    out.crossings.push_back(c);
    // The kink tangle offers its two loose ends in one of two ways; exactly
    // one attachment closes up planar, so probe and fall back.
    auto attach = [&](HalfEdge pu, HalfEdge qw) {
      SpatialDiagram trial = out;
      trial.arcs.push_back({p, pu});
      trial.arc_label.push_back(label);
      trial.arcs.push_back({qw, q});
      trial.arc_label.push_back(label);
      trial.arcs.push_back({lv, lw});
      trial.arc_label.push_back(label);
      return trial;
    };
    SpatialDiagram trial = attach(u, w);
    if (!validate(trial).empty()) trial = attach(w, u);
    out = std::move(trial);
  } else {
    if (m.loop < 0 || m.loop >= static_cast<int>(out.free_loops.size()))
      throw Error("apply: R1+ free loop index out of range");
    const EdgeLabel label = out.free_loops[m.loop];
    out.free_loops.erase(out.free_loops.begin() + m.loop);
    out.crossings.push_back(c);
    out.arcs.push_back({lv, lw});
    out.arc_label.push_back(label);
    out.arcs.push_back({u, w});
    out.arc_label.push_back(label);
  }
  return finished(std::move(out), d.family);
}

// Slot v such that the arc {slot[v], slot[v+1]} is a kink loop, or -1.
int kink_slot(const Topology& t, const Crossing& c) {
  for (int v = 0; v < 4; ++v)
    if (t.mate(c.slot[v]) == c.slot[(v + 1) % 4]) return v;
  return -1;
}

SpatialDiagram apply_r1_down(const SpatialDiagram& d, const Move& m) {
  const Crossing* c = d.crossing_by_id(m.crossing);
  if (!c) throw Error("apply: R1- crossing not found");
  Topology t(d);
  const int v = kink_slot(t, *c);
  if (v < 0) throw Error("apply: R1- crossing carries no kink loop");
  const int loop_arc = arc_index_of(t, c->slot[v]);
  SpatialDiagram out = d;
  rewire_remove(out, {c->id},
                {{c->slot[(v + 2) % 4], c->slot[(v + 3) % 4]}}, {loop_arc});
  return finished(std::move(out), d.family);
}

// ---- R2 --------------------------------------------------------------------

SpatialDiagram apply_r2_up(const SpatialDiagram& d, const Move& m) {
  Topology t(d);
  const HalfEdge ha = m.h1, hb = m.h2;
  const int ia = arc_index_of(t, ha);
  const int ib = arc_index_of(t, hb);
  if (ia == ib) throw Error("apply: R2+ needs two distinct arcs");
  const std::vector<HalfEdge> orbit = face_from(d, t, ha);
  if (std::find(orbit.begin(), orbit.end(), hb) == orbit.end())
    throw Error("apply: R2+ half-edges do not depart one face");
  const HalfEdge ma = t.mate(ha), mb = t.mate(hb);
  const EdgeLabel la = d.arc_label[ia], lb = d.arc_label[ib];

  SpatialDiagram out = d;
  const HalfEdge h0 = out.fresh_half_edge();
  Crossing cl, cr;
  cl.id = out.fresh_crossing_id();
  cr.id = cl.id + 1;
  cl.slot = {h0, h0 + 1, h0 + 2, h0 + 3};
  cr.slot = {h0 + 4, h0 + 5, h0 + 6, h0 + 7};
  for (int idx : {std::max(ia, ib), std::min(ia, ib)}) {
    out.arcs.erase(out.arcs.begin() + idx);
    out.arc_label.erase(out.arc_label.begin() + idx);
  }
  out.crossings.push_back(cl);
  out.crossings.push_back(cr);
  // The pushed strand passes over at both new crossings (odd slots), the
  // stationary strand under (even slots); the bigon sits between them.
  const std::vector<std::pair<HalfEdge, HalfEdge>> added = {
      {ha, cl.slot[3]}, {cl.slot[1], cr.slot[1]}, {cr.slot[3], ma},
      {hb, cr.slot[2]}, {cr.slot[0], cl.slot[2]}, {cl.slot[0], mb}};
  const std::vector<EdgeLabel> labels = {la, la, la, lb, lb, lb};
  for (std::size_t i = 0; i < added.size(); ++i) {
    out.arcs.push_back(added[i]);
    out.arc_label.push_back(labels[i]);
  }
  return finished(std::move(out), d.family);
}

// A length-2 face is R2-removable when one strand runs over at both corners:
// both ends of either bigon arc have the same slot parity.
bool bigon_removable(const SpatialDiagram& d, const Topology& t,
                     const std::vector<HalfEdge>& orbit) {
  if (orbit.size() != 2) return false;
  const auto& a1 = t.attach(orbit[0]);
  const auto& a2 = t.attach(orbit[1]);
  if (!a1.at_crossing || !a2.at_crossing) return false;
  if (a1.owner == a2.owner) return false;
  return t.attach(t.mate(orbit[0])).pos % 2 == a1.pos % 2;
}

SpatialDiagram apply_r2_down(const SpatialDiagram& d, const Move& m) {
  Topology t(d);
  const std::vector<HalfEdge> orbit = face_from(d, t, m.h1);
  if (orbit.size() != 2) throw Error("apply: R2- needs a bigon face");
  if (!bigon_removable(d, t, orbit))
    throw Error("apply: R2- bigon is clasped, not removable");
  std::vector<int> dead;
  std::vector<std::pair<HalfEdge, HalfEdge>> joins;
  for (HalfEdge g : orbit) {
    const Crossing* c = d.crossing_by_id(t.attach(g).owner);
    dead.push_back(c->id);
    joins.push_back({c->slot[0], c->slot[2]});
    joins.push_back({c->slot[1], c->slot[3]});
  }
  SpatialDiagram out = d;
  rewire_remove(out, dead, joins, {});
  return finished(std::move(out), d.family);
}

// ---- R3 --------------------------------------------------------------------

// A triangular face slides iff one side runs over at both its corners and
// another under at both (the third is then mixed). All corners must be
// distinct crossings.
bool triangle_slidable(const SpatialDiagram& d, const Topology& t,
                       const std::vector<HalfEdge>& orbit) {
  if (orbit.size() != 3) return false;
  std::set<int> owners;
  for (HalfEdge g : orbit) {
    const auto& a = t.attach(g);
    if (!a.at_crossing) return false;
    owners.insert(a.owner);
  }
  if (owners.size() != 3) return false;
  int both_over = 0, both_under = 0;
  for (HalfEdge g : orbit) {
    const int pg = t.attach(g).pos % 2;
    const int pm = t.attach(t.mate(g)).pos % 2;
    if (pg == 1 && pm == 1) ++both_over;
    if (pg == 0 && pm == 0) ++both_under;
  }
  return both_over == 1 && both_under == 1;
}

SpatialDiagram apply_r3(const SpatialDiagram& d, const Move& m) {
  Topology t(d);
  const std::vector<HalfEdge> orbit = face_from(d, t, m.h1);
  if (orbit.size() != 3) throw Error("apply: R3 needs a triangular face");
  if (!triangle_slidable(d, t, orbit))
    throw Error("apply: R3 triangle has no strand over the other two");
  // The triangle flips to the diagonally opposite slots of its corners; each
  // outer strand end swaps onto the slot its side vacated at the far corner.
  std::map<HalfEdge, HalfEdge> sigma;
  for (HalfEdge g : orbit) {
    const HalfEdge mg = t.mate(g);
    sigma[g] = across(d, t, g);
    sigma[mg] = across(d, t, mg);
    sigma[across(d, t, g)] = mg;
    sigma[across(d, t, mg)] = g;
  }
  SpatialDiagram out = d;
  for (auto& [p, q] : out.arcs) {
    if (auto it = sigma.find(p); it != sigma.end()) p = it->second;
    if (auto it = sigma.find(q); it != sigma.end()) q = it->second;
  }
  return finished(std::move(out), d.family);
}

// ---- V-slide ---------------------------------------------------------------

// Local slot roles at each crossing a wrapping strand makes with another edge
// of the node: the edge runs node-side <-> outward, the wrap enters from its
// sweep direction and leaves opposite.
struct LassoSlots {
  int ein;    // wrap strand enters
  int wout;   // wrap strand leaves
  int vside;  // other edge, toward the node
  int oside;  // other edge, outward
};

LassoSlots lasso_slots(bool over) {
  if (over) return {1, 3, 0, 2};
  return {0, 2, 3, 1};
}

SpatialDiagram apply_v_wrap(const SpatialDiagram& d, const Move& m) {
  const GraphNode* v = d.node_by_id(m.node);
  if (!v) throw Error("apply: V-slide node not found");
  const int deg = static_cast<int>(v->rot.size());
  if (m.pos < 0 || m.pos >= deg)
    throw Error("apply: V-slide rotation position out of range");
  if (deg < 2) throw Error("apply: V-slide needs a node of degree >= 2");
  Topology t(d);
  const HalfEdge h = v->rot[m.pos];
  const HalfEdge u = t.mate(h);
  {
    const auto& au = t.attach(u);
    if (!au.at_crossing && au.owner == v->id)
      throw Error("apply: V-slide cannot wrap an edge looping at its node");
  }
  const int ih = arc_index_of(t, h);
  const EdgeLabel slid_label = d.arc_label[ih];
  const LassoSlots ls = lasso_slots(m.over);

  SpatialDiagram out = d;
  const HalfEdge h0 = out.fresh_half_edge();
  const int c0 = out.fresh_crossing_id();
  // One crossing per other edge end, in counterclockwise sweep order.
  std::vector<Crossing> xs;
  for (int k = 1; k < deg; ++k) {
    Crossing x;
    x.id = c0 + (k - 1);
    const HalfEdge b = h0 + 4 * (k - 1);
    x.slot = {b, b + 1, b + 2, b + 3};
    xs.push_back(x);
  }
  for (int k = 1; k < deg; ++k) {
    const HalfEdge e = v->rot[(m.pos + k) % deg];
    const int ie = arc_index_of(t, e);
    const EdgeLabel le = out.arc_label[ie];
    const Crossing& x = xs[k - 1];
    auto& pr = out.arcs[ie];
    (pr.first == e ? pr.first : pr.second) = x.slot[ls.oside];
    out.arcs.push_back({e, x.slot[ls.vside]});
    out.arc_label.push_back(le);
    out.crossings.push_back(x);
  }
  // Reroute the slid strand: u, around every other edge once, back into h.
  auto& pr = out.arcs[ih];
  (pr.first == h ? pr.first : pr.second) = xs.front().slot[ls.ein];
  for (int k = 1; k + 1 < deg; ++k) {
    out.arcs.push_back({xs[k - 1].slot[ls.wout], xs[k].slot[ls.ein]});
    out.arc_label.push_back(slid_label);
  }
  out.arcs.push_back({xs.back().slot[ls.wout], h});
  out.arc_label.push_back(slid_label);
  return finished(std::move(out), d.family);
}

// Matches the exact crossing pattern apply_v_wrap leaves behind; fills `dead`
// with the wrap crossings in chain order when it matches.
bool lasso_matches(const SpatialDiagram& d, const Topology& t,
                   const GraphNode& v, int pos, bool over,
                   std::vector<int>* dead_out) {
  const int deg = static_cast<int>(v.rot.size());
  if (pos < 0 || pos >= deg || deg < 2) return false;
  const LassoSlots ls = lasso_slots(over);
  std::vector<int> dead;
  std::set<int> seen;
  HalfEdge cur = t.mate(v.rot[pos]);
  for (int k = deg - 1; k >= 1; --k) {
    const auto& ac = t.attach(cur);
    if (!ac.at_crossing || ac.pos != ls.wout) return false;
    const Crossing* x = d.crossing_by_id(ac.owner);
    if (!seen.insert(x->id).second) return false;
    if (t.mate(x->slot[ls.vside]) != v.rot[(pos + k) % deg]) return false;
    dead.push_back(x->id);
    cur = t.mate(x->slot[ls.ein]);
  }
  const auto& au = t.attach(cur);
  if (au.at_crossing && seen.count(au.owner)) return false;
  if (dead_out) *dead_out = std::move(dead);
  return true;
}

SpatialDiagram apply_v_unwrap(const SpatialDiagram& d, const Move& m) {
  const GraphNode* v = d.node_by_id(m.node);
  if (!v) throw Error("apply: V-slide node not found");
  Topology t(d);
  std::vector<int> dead;
  if (!lasso_matches(d, t, *v, m.pos, m.over, &dead))
    throw Error("apply: V-slide unwrap site does not match a wrap");
  std::vector<std::pair<HalfEdge, HalfEdge>> joins;
  for (int id : dead) {
    const Crossing* c = d.crossing_by_id(id);
    joins.push_back({c->slot[0], c->slot[2]});
    joins.push_back({c->slot[1], c->slot[3]});
  }
  SpatialDiagram out = d;
  rewire_remove(out, dead, joins, {});
  int vindex = -1;
  for (std::size_t i = 0; i < out.nodes.size(); ++i)
    if (out.nodes[i].id == m.node) vindex = static_cast<int>(i);
  SpatialDiagram res = finished(std::move(out), d.family);
  // Guard: the unwrap is only the inverse of a wrap; re-wrapping at the same
  // site has to reproduce the input, otherwise the pattern was a look-alike.
  SpatialDiagram redo = apply_v_wrap(
      res, v_slide(res.nodes[vindex].id, m.pos, m.over, true));
  if (canonical_encoding(redo) != canonical_encoding(d))
    throw Error("apply: V-slide unwrap does not invert a wrap here");
  return res;
}

bool grows(const Move& m) {
  switch (m.kind) {
    case MoveKind::R1Up:
    case MoveKind::R2Up:
      return true;
    case MoveKind::VSlide:
      return m.expand;
    default:
      return false;
  }
}

}  // namespace

// ---- public surface --------------------------------------------------------

Move r1_up(int arc, int variant) {
  Move m;
  m.kind = MoveKind::R1Up;
  m.arc = arc;
  m.variant = variant;
  return m;
}

Move r1_up_loop(int loop, int variant) {
  Move m;
  m.kind = MoveKind::R1Up;
  m.loop = loop;
  m.variant = variant;
  return m;
}

Move r1_down(int crossing) {
  Move m;
  m.kind = MoveKind::R1Down;
  m.crossing = crossing;
  return m;
}

Move r2_up(HalfEdge over_depart, HalfEdge under_depart) {
  Move m;
  m.kind = MoveKind::R2Up;
  m.h1 = over_depart;
  m.h2 = under_depart;
  return m;
}

Move r2_down(HalfEdge face_half_edge) {
  Move m;
  m.kind = MoveKind::R2Down;
  m.h1 = face_half_edge;
  return m;
}

Move r3(HalfEdge face_half_edge) {
  Move m;
  m.kind = MoveKind::R3;
  m.h1 = face_half_edge;
  return m;
}

Move v_slide(int node, int pos, bool over, bool expand) {
  Move m;
  m.kind = MoveKind::VSlide;
  m.node = node;
  m.pos = pos;
  m.over = over;
  m.expand = expand;
  return m;
}

std::string Move::str() const {
  switch (kind) {
    case MoveKind::R1Up:
      return (arc >= 0 ? "R1+(arc " + std::to_string(arc)
                       : "R1+(loop " + std::to_string(loop)) +
             ", v" + std::to_string(variant) + ")";
    case MoveKind::R1Down:
      return "R1-(crossing " + std::to_string(crossing) + ")";
    case MoveKind::R2Up:
      return "R2+(over h" + std::to_string(h1) + ", under h" +
             std::to_string(h2) + ")";
    case MoveKind::R2Down:
      return "R2-(face h" + std::to_string(h1) + ")";
    case MoveKind::R3:
      return "R3(face h" + std::to_string(h1) + ")";
    case MoveKind::VSlide:
      return std::string(expand ? "V+" : "V-") + "(node " +
             std::to_string(node) + ", end " + std::to_string(pos) +
             (over ? ", over)" : ", under)");
  }
  return "?";
}

SpatialDiagram apply(const SpatialDiagram& d, const Move& m) {
  switch (m.kind) {
    case MoveKind::R1Up:
      return apply_r1_up(d, m);
    case MoveKind::R1Down:
      return apply_r1_down(d, m);
    case MoveKind::R2Up:
      return apply_r2_up(d, m);
    case MoveKind::R2Down:
      return apply_r2_down(d, m);
    case MoveKind::R3:
      return apply_r3(d, m);
    case MoveKind::VSlide:
      return m.expand ? apply_v_wrap(d, m) : apply_v_unwrap(d, m);
  }
  throw Error("apply: unknown move kind");
}

std::vector<Move> enumerate_moves(const SpatialDiagram& d, int max_growth) {
  std::vector<Move> out;
  Topology t(d);
  const std::vector<std::vector<HalfEdge>> fs = faces(d);
  for (const Crossing& c : d.crossings)
    if (kink_slot(t, c) >= 0) out.push_back(r1_down(c.id));
  for (const auto& orbit : fs)
    if (bigon_removable(d, t, orbit)) out.push_back(r2_down(orbit[0]));
  for (const GraphNode& v : d.nodes)
    for (int pos = 0; pos < static_cast<int>(v.rot.size()); ++pos)
      for (bool over : {true, false})
        if (lasso_matches(d, t, v, pos, over, nullptr))
          out.push_back(v_slide(v.id, pos, over, false));
  for (const auto& orbit : fs)
    if (triangle_slidable(d, t, orbit)) out.push_back(r3(orbit[0]));
  if (max_growth >= 1) {
    for (int a = 0; a < static_cast<int>(d.arcs.size()); ++a)
      for (int v = 0; v < 4; ++v) out.push_back(r1_up(a, v));
    for (int l = 0; l < static_cast<int>(d.free_loops.size()); ++l)
      for (int v = 0; v < 4; ++v) out.push_back(r1_up_loop(l, v));
  }
  if (max_growth >= 2) {
    for (const auto& orbit : fs) {
      const int n = static_cast<int>(orbit.size());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          if (t.arc_of.at(orbit[i]) == t.arc_of.at(orbit[j])) continue;
          out.push_back(r2_up(orbit[i], orbit[j]));
        }
    }
  }
  for (const GraphNode& v : d.nodes) {
    const int deg = static_cast<int>(v.rot.size());
    if (deg < 2 || deg - 1 > max_growth) continue;
    for (int pos = 0; pos < deg; ++pos) {
      const auto& au = t.attach(t.mate(v.rot[pos]));
      if (!au.at_crossing && au.owner == v.id) continue;
      for (bool over : {true, false})
        out.push_back(v_slide(v.id, pos, over, true));
    }
  }
  return out;
}

SpatialDiagram scramble(const SpatialDiagram& d, int count,
                        std::uint64_t seed) {
  SpatialDiagram out = d;
  renumber(out);
  require_valid(out, "scramble");
  std::mt19937_64 gen(seed);
  for (int step = 0; step < count; ++step) {
    std::vector<Move> candidates;
    for (const Move& m : enumerate_moves(out, 1 << 20))
      if (grows(m) || m.kind == MoveKind::R3) candidates.push_back(m);
    if (candidates.empty()) break;
    out = apply(out, candidates[gen() % candidates.size()]);
  }
  return out;
}

SearchResult simplify(const SpatialDiagram& d, long long budget, int depth) {
  SpatialDiagram start = d;
  renumber(start);
  require_valid(start, "simplify");
  const int cap = static_cast<int>(start.crossings.size()) + std::max(depth, 0);

  struct Entry {
    SpatialDiagram diag;
    int parent = -1;
    Move via;
    int crossings = 0;
  };
  std::vector<Entry> seen;
  std::map<std::string, int> visited;
  // (crossing count, discovery order, entry index), smallest first.
  using Item = std::tuple<int, long long, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> frontier;

  const std::string start_enc = canonical_encoding(start);
  seen.push_back({start, -1, Move{}, static_cast<int>(start.crossings.size())});
  visited[start_enc] = 0;
  frontier.push({seen[0].crossings, 0, 0});
  int best_index = 0;
  int best_crossings = seen[0].crossings;
  std::string best_enc = start_enc;
  SpatialDiagram best = start;
  long long discovered = 0;
  long long expanded = 0;
  bool out_of_budget = false;

  while (!frontier.empty() && best_crossings > 0) {
    if (discovered >= budget) {
      out_of_budget = true;
      break;
    }
    const auto [count, order, index] = frontier.top();
    frontier.pop();
    ++expanded;
    const SpatialDiagram current = seen[index].diag;
    seen[index].diag = SpatialDiagram{};  // frontier copies dominate memory
    for (const Move& m : enumerate_moves(current, cap - count)) {
      if (discovered >= budget) {
        out_of_budget = true;
        break;
      }
      SpatialDiagram child;
      try {
        child = apply(current, m);
      } catch (const Error&) {
        continue;  // pattern-matched site rejected on closer inspection
      }
      const int cc = static_cast<int>(child.crossings.size());
      if (cc > cap) continue;
      std::string enc = canonical_encoding(child);
      if (visited.count(enc)) continue;
      const int idx = static_cast<int>(seen.size());
      visited.emplace(enc, idx);
      if (cc < best_crossings || (cc == best_crossings && enc < best_enc)) {
        best_crossings = cc;
        best_enc = enc;
        best_index = idx;
        best = child;
      }
      seen.push_back({child, index, m, cc});
      frontier.push({cc, ++discovered, idx});
      if (best_crossings == 0) break;
    }
  }

  SearchResult res;
  res.best = best;
  res.best_crossings = best_crossings;
  res.explored = expanded;
  res.exhausted = out_of_budget;
  for (int at = best_index; at > 0; at = seen[at].parent)
    res.trace.push_back(seen[at].via);
  std::reverse(res.trace.begin(), res.trace.end());
  return res;
}

}  // namespace knotwork
