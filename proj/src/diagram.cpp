#include "knotwork/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace knotwork {

namespace {

// Small union-find over dense indices.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Owner key: crossings and nodes share an index space for component tracking.
using OwnerKey = std::pair<int, int>;  // {0, crossing id} or {1, node id}

OwnerKey owner_key(const Topology::Attach& a) {
  return {a.at_crossing ? 0 : 1, a.owner};
}

struct OwnerIndex {
  std::map<OwnerKey, int> idx;
  std::vector<OwnerKey> keys;
  int get(const OwnerKey& k) {
    auto it = idx.find(k);
    if (it != idx.end()) return it->second;
    int i = static_cast<int>(keys.size());
    idx.emplace(k, i);
    keys.push_back(k);
    return i;
  }
};

}  // namespace

char family_char(LabelFamily f) {
  switch (f) {
    case LabelFamily::X: return 'x';
    case LabelFamily::Y: return 'y';
    case LabelFamily::Z: return 'z';
    case LabelFamily::H: return 'h';
  }
  return '?';
}

std::string EdgeLabel::str() const {
  std::ostringstream os;
  os << family_char(fam) << index;
  return os.str();
}

EdgeLabel EdgeLabel::parse(const std::string& s) {
  if (s.size() < 2) throw Error("bad edge label: " + s);
  LabelFamily f;
  switch (s[0]) {
    case 'x': f = LabelFamily::X; break;
    case 'y': f = LabelFamily::Y; break;
    case 'z': f = LabelFamily::Z; break;
    case 'h': f = LabelFamily::H; break;
    default: throw Error("bad edge label: " + s);
  }
  int idx = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw Error("bad edge label: " + s);
    idx = idx * 10 + (s[i] - '0');
  }
  return EdgeLabel{f, idx};
}

std::string Family::str() const {
  std::ostringstream os;
  switch (kind) {
    case FamilyKind::Knot: os << "knot"; break;
    case FamilyKind::Theta: os << "theta"; break;
    case FamilyKind::ThetaN: os << "theta-n " << n; break;
    case FamilyKind::Oplus: os << "oplus " << n << " " << k; break;
    case FamilyKind::Grid: os << "G " << n << " " << k << " " << i; break;
    case FamilyKind::Raw: os << "raw"; break;
  }
  return os.str();
}

Crossing* SpatialDiagram::crossing_by_id(int id) {
  for (auto& c : crossings)
    if (c.id == id) return &c;
  return nullptr;
}

const Crossing* SpatialDiagram::crossing_by_id(int id) const {
  for (const auto& c : crossings)
    if (c.id == id) return &c;
  return nullptr;
}

GraphNode* SpatialDiagram::node_by_id(int id) {
  for (auto& n : nodes)
    if (n.id == id) return &n;
  return nullptr;
}

const GraphNode* SpatialDiagram::node_by_id(int id) const {
  for (const auto& n : nodes)
    if (n.id == id) return &n;
  return nullptr;
}

HalfEdge SpatialDiagram::fresh_half_edge() const {
  HalfEdge m = 0;
  for (const auto& c : crossings)
    for (HalfEdge h : c.slot) m = std::max(m, h + 1);
  for (const auto& n : nodes)
    for (HalfEdge h : n.rot) m = std::max(m, h + 1);
  for (const auto& [a, b] : arcs) m = std::max({m, a + 1, b + 1});
  return m;
}

int SpatialDiagram::fresh_crossing_id() const {
  int m = 0;
  for (const auto& c : crossings) m = std::max(m, c.id + 1);
  return m;
}

int SpatialDiagram::fresh_node_id() const {
  int m = 0;
  for (const auto& n : nodes) m = std::max(m, n.id + 1);
  return m;
}

Topology::Topology(const SpatialDiagram& diagram) : d(&diagram) {
  for (const auto& c : d->crossings)
    for (int s = 0; s < 4; ++s) {
      auto [it, fresh] = at.emplace(c.slot[s], Attach{true, c.id, s});
      if (!fresh) throw Error("duplicate half-edge " + std::to_string(c.slot[s]));
    }
  for (const auto& n : d->nodes)
    for (int p = 0; p < static_cast<int>(n.rot.size()); ++p) {
      auto [it, fresh] = at.emplace(n.rot[p], Attach{false, n.id, p});
      if (!fresh) throw Error("duplicate half-edge " + std::to_string(n.rot[p]));
    }
  for (int i = 0; i < static_cast<int>(d->arcs.size()); ++i) {
    auto [a, b] = d->arcs[i];
    if (a == b) throw Error("degenerate arc " + std::to_string(i));
    auto [ia, fa] = partner.emplace(a, b);
    auto [ib, fb] = partner.emplace(b, a);
    if (!fa || !fb)
      throw Error("duplicate half-edge in arcs: arc " + std::to_string(i));
    arc_of[a] = i;
    arc_of[b] = i;
  }
}

const Topology::Attach& Topology::attach(HalfEdge h) const {
  auto it = at.find(h);
  if (it == at.end()) throw Error("unattached half-edge " + std::to_string(h));
  return it->second;
}

HalfEdge Topology::mate(HalfEdge h) const {
  auto it = partner.find(h);
  if (it == partner.end()) throw Error("unpaired half-edge " + std::to_string(h));
  return it->second;
}

HalfEdge Topology::next_ccw(HalfEdge h) const {
  const Attach& a = attach(h);
  if (a.at_crossing) {
    const Crossing* c = d->crossing_by_id(a.owner);
    return c->slot[(a.pos + 1) % 4];
  }
  const GraphNode* n = d->node_by_id(a.owner);
  int deg = static_cast<int>(n->rot.size());
  return n->rot[(a.pos + 1) % deg];
}

HalfEdge Topology::prev_ccw(HalfEdge h) const {
  const Attach& a = attach(h);
  if (a.at_crossing) {
    const Crossing* c = d->crossing_by_id(a.owner);
    return c->slot[(a.pos + 3) % 4];
  }
  const GraphNode* n = d->node_by_id(a.owner);
  int deg = static_cast<int>(n->rot.size());
  return n->rot[(a.pos + deg - 1) % deg];
}

int Topology::degree_at(HalfEdge h) const {
  const Attach& a = attach(h);
  if (a.at_crossing) return 4;
  return static_cast<int>(d->node_by_id(a.owner)->rot.size());
}

const EdgeLabel& Topology::label_at(HalfEdge h) const {
  auto it = arc_of.find(h);
  if (it == arc_of.end()) throw Error("unpaired half-edge " + std::to_string(h));
  return d->arc_label[it->second];
}

SpatialDiagram from_pd(const std::vector<std::array<int, 4>>& code,
                       EdgeLabel label) {
  SpatialDiagram d;
  d.family = Family{FamilyKind::Knot, 0, 0, 0};
  std::map<int, std::vector<HalfEdge>> occ;
  for (int ci = 0; ci < static_cast<int>(code.size()); ++ci) {
    Crossing c;
    c.id = ci;
    for (int s = 0; s < 4; ++s) {
      c.slot[s] = 4 * ci + s;
      occ[code[ci][s]].push_back(4 * ci + s);
    }
    d.crossings.push_back(c);
  }
  for (const auto& [edge, hs] : occ) {
    if (hs.size() != 2)
      throw Error("bad PD code: edge " + std::to_string(edge) + " appears " +
                  std::to_string(hs.size()) + " times");
    d.arcs.emplace_back(hs[0], hs[1]);
    d.arc_label.push_back(label);
  }
  require_valid(d, "from_pd");
  return d;
}

std::vector<std::vector<HalfEdge>> faces(const SpatialDiagram& d) {
  Topology t(d);
  std::set<HalfEdge> todo;
  for (const auto& [h, p] : t.partner) todo.insert(h);
  std::vector<std::vector<HalfEdge>> out;
  while (!todo.empty()) {
    HalfEdge h0 = *todo.begin();
    std::vector<HalfEdge> orbit;
    HalfEdge h = h0;
    do {
      orbit.push_back(h);
      todo.erase(h);
      h = t.next_ccw(t.mate(h));
    } while (h != h0);
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<std::string> validate(const SpatialDiagram& d) {
  std::vector<std::string> problems;
  std::map<HalfEdge, int> owned;
  std::set<int> cids, nids;
  for (const auto& c : d.crossings) {
    if (!cids.insert(c.id).second)
      problems.push_back("duplicate crossing id " + std::to_string(c.id));
    for (HalfEdge h : c.slot) {
      if (h < 0)
        problems.push_back("crossing " + std::to_string(c.id) +
                           " has an empty slot");
      else
        owned[h]++;
    }
  }
  for (const auto& n : d.nodes) {
    if (!nids.insert(n.id).second)
      problems.push_back("duplicate node id " + std::to_string(n.id));
    if (n.rot.empty())
      problems.push_back("empty node " + std::to_string(n.id));
    for (HalfEdge h : n.rot) {
      if (h < 0)
        problems.push_back("node " + std::to_string(n.id) + " has a bad slot");
      else
        owned[h]++;
    }
  }
  for (const auto& [h, k] : owned)
    if (k > 1) problems.push_back("duplicate half-edge " + std::to_string(h));
  std::map<HalfEdge, int> in_arcs;
  for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i) {
    auto [a, b] = d.arcs[i];
    if (a == b) problems.push_back("degenerate arc " + std::to_string(i));
    in_arcs[a]++;
    in_arcs[b]++;
  }
  for (const auto& [h, k] : in_arcs) {
    if (k > 1)
      problems.push_back("duplicate half-edge " + std::to_string(h) +
                         " in arcs");
    if (!owned.count(h))
      problems.push_back("dangling arc endpoint " + std::to_string(h));
  }
  for (const auto& [h, k] : owned)
    if (!in_arcs.count(h))
      problems.push_back("unpaired half-edge " + std::to_string(h));
  if (d.arc_label.size() != d.arcs.size())
    problems.push_back("unlabeled arcs");
  if (!problems.empty()) return problems;

  Topology t(d);
  for (const auto& c : d.crossings) {
    if (t.label_at(c.slot[0]) != t.label_at(c.slot[2]) ||
        t.label_at(c.slot[1]) != t.label_at(c.slot[3]))
      problems.push_back("label mismatch at crossing " + std::to_string(c.id));
  }
  if (!problems.empty()) return problems;

  // Planarity: V - E + F == 2 on every connected component.
  OwnerIndex oi;
  for (const auto& c : d.crossings) oi.get({0, c.id});
  for (const auto& n : d.nodes) oi.get({1, n.id});
  Dsu dsu(static_cast<int>(oi.keys.size()));
  for (const auto& [a, b] : d.arcs)
    dsu.unite(oi.get(owner_key(t.attach(a))), oi.get(owner_key(t.attach(b))));
  std::map<int, int> vcount, ecount, fcount;
  for (int i = 0; i < static_cast<int>(oi.keys.size()); ++i)
    vcount[dsu.find(i)]++;
  for (const auto& [a, b] : d.arcs)
    ecount[dsu.find(oi.get(owner_key(t.attach(a))))]++;
  for (const auto& orbit : faces(d))
    fcount[dsu.find(oi.get(owner_key(t.attach(orbit[0]))))]++;
  for (const auto& [root, v] : vcount) {
    int e = ecount.count(root) ? ecount[root] : 0;
    int f = fcount.count(root) ? fcount[root] : 0;
    if (v - e + f != 2)
      problems.push_back("euler check failed (V=" + std::to_string(v) +
                         " E=" + std::to_string(e) + " F=" + std::to_string(f) +
                         ")");
  }
  return problems;
}

void require_valid(const SpatialDiagram& d, const std::string& where) {
  auto problems = validate(d);
  if (problems.empty()) return;
  std::string msg = where + ":";
  for (const auto& p : problems) msg += " " + p + ";";
  throw Error(msg);
}

int component_count(const SpatialDiagram& d) {
  Topology t(d);
  OwnerIndex oi;
  for (const auto& c : d.crossings) oi.get({0, c.id});
  for (const auto& n : d.nodes) oi.get({1, n.id});
  Dsu dsu(static_cast<int>(oi.keys.size()));
  for (const auto& [a, b] : d.arcs)
    dsu.unite(oi.get(owner_key(t.attach(a))), oi.get(owner_key(t.attach(b))));
  std::set<int> roots;
  for (int i = 0; i < static_cast<int>(oi.keys.size()); ++i)
    roots.insert(dsu.find(i));
  return static_cast<int>(roots.size() + d.free_loops.size());
}

std::vector<SpatialDiagram> split_components(const SpatialDiagram& d) {
  Topology t(d);
  OwnerIndex oi;
  for (const auto& c : d.crossings) oi.get({0, c.id});
  for (const auto& n : d.nodes) oi.get({1, n.id});
  Dsu dsu(static_cast<int>(oi.keys.size()));
  for (const auto& [a, b] : d.arcs)
    dsu.unite(oi.get(owner_key(t.attach(a))), oi.get(owner_key(t.attach(b))));
  std::vector<int> root_order;
  std::map<int, int> root_slot;
  for (int i = 0; i < static_cast<int>(oi.keys.size()); ++i) {
    int r = dsu.find(i);
    if (!root_slot.count(r)) {
      root_slot[r] = static_cast<int>(root_order.size());
      root_order.push_back(r);
    }
  }
  std::vector<SpatialDiagram> out(root_order.size());
  for (auto& piece : out) piece.family = Family{FamilyKind::Raw, 0, 0, 0};
  for (const auto& c : d.crossings)
    out[root_slot[dsu.find(oi.get({0, c.id}))]].crossings.push_back(c);
  for (const auto& n : d.nodes)
    out[root_slot[dsu.find(oi.get({1, n.id}))]].nodes.push_back(n);
  for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i) {
    int slot = root_slot[dsu.find(oi.get(owner_key(t.attach(d.arcs[i].first))))];
    out[slot].arcs.push_back(d.arcs[i]);
    out[slot].arc_label.push_back(d.arc_label[i]);
  }
  for (const EdgeLabel& l : d.free_loops) {
    SpatialDiagram piece;
    piece.family = Family{FamilyKind::Raw, 0, 0, 0};
    piece.free_loops.push_back(l);
    out.push_back(std::move(piece));
  }
  return out;
}

std::vector<std::vector<HalfEdge>> strand_circuits(const SpatialDiagram& d) {
  Topology t(d);
  std::set<HalfEdge> unvisited;
  for (const auto& [h, p] : t.partner) unvisited.insert(h);
  std::vector<std::vector<HalfEdge>> out;
  while (!unvisited.empty()) {
    HalfEdge start = *unvisited.begin();
    std::vector<HalfEdge> seq;
    HalfEdge h = start;  // enters its owner
    do {
      const auto& a = t.attach(h);
      if (!a.at_crossing) throw Error("strand through node");
      seq.push_back(h);
      unvisited.erase(h);
      HalfEdge e = d.crossing_by_id(a.owner)->slot[(a.pos + 2) % 4];
      seq.push_back(e);
      unvisited.erase(e);
      h = t.mate(e);
    } while (h != start);
    out.push_back(std::move(seq));
  }
  return out;
}

std::map<HalfEdge, int> orient_strands(const SpatialDiagram& d) {
  std::map<HalfEdge, int> ori;
  for (const auto& seq : strand_circuits(d))
    for (size_t i = 0; i < seq.size(); ++i) ori[seq[i]] = (i % 2 == 0) ? 1 : -1;
  return ori;
}

std::map<int, int> crossing_signs(const SpatialDiagram& d) {
  auto ori = orient_strands(d);
  std::map<int, int> sign;
  for (const auto& c : d.crossings) {
    int ue = ori.at(c.slot[0]) > 0 ? 0 : 2;
    int oe = ori.at(c.slot[1]) > 0 ? 1 : 3;
    sign[c.id] = ((oe - ue + 4) % 4 == 1) ? 1 : -1;
  }
  return sign;
}

int writhe(const SpatialDiagram& d) {
  int w = 0;
  for (const auto& [id, s] : crossing_signs(d)) w += s;
  return w;
}

std::vector<EdgeLabel> edge_labels(const SpatialDiagram& d) {
  std::set<EdgeLabel> s(d.arc_label.begin(), d.arc_label.end());
  s.insert(d.free_loops.begin(), d.free_loops.end());
  return std::vector<EdgeLabel>(s.begin(), s.end());
}

std::map<EdgeLabel, std::map<EdgeLabel, int>> crossing_matrix(
    const SpatialDiagram& d) {
  Topology t(d);
  std::map<EdgeLabel, std::map<EdgeLabel, int>> m;
  for (const EdgeLabel& l : edge_labels(d))
    for (const EdgeLabel& l2 : edge_labels(d)) m[l][l2] = 0;
  for (const auto& c : d.crossings) {
    EdgeLabel lu = t.label_at(c.slot[0]);
    EdgeLabel lo = t.label_at(c.slot[1]);
    m[lu][lo]++;
    if (!(lu == lo)) m[lo][lu]++;
  }
  return m;
}

SpatialDiagram mirror(const SpatialDiagram& d) {
  SpatialDiagram m = d;
  for (auto& c : m.crossings) {
    auto s = c.slot;
    c.slot = {s[1], s[2], s[3], s[0]};
  }
  return m;
}

void rewire_remove(SpatialDiagram& d, const std::vector<int>& dead,
                   const std::vector<std::pair<HalfEdge, HalfEdge>>& joins,
                   const std::vector<int>& drop_arcs) {
  Topology t(d);
  std::set<int> dead_set(dead.begin(), dead.end());
  std::set<int> dropped(drop_arcs.begin(), drop_arcs.end());
  std::map<HalfEdge, HalfEdge> jn;
  for (const auto& [a, b] : joins) {
    jn[a] = b;
    jn[b] = a;
  }
  auto is_dead_h = [&](HalfEdge h) {
    const auto& a = t.attach(h);
    return a.at_crossing && dead_set.count(a.owner) > 0;
  };
  // Dropped arcs: endpoints may sit on dead crossings or nodes, never on a
  // surviving crossing.
  std::set<HalfEdge> gone;
  for (int ai : dropped) {
    for (HalfEdge h : {d.arcs[ai].first, d.arcs[ai].second}) {
      const auto& a = t.attach(h);
      if (a.at_crossing && !dead_set.count(a.owner))
        throw Error("rewire: dropped arc attached to live crossing");
      gone.insert(h);
    }
  }
  int narcs = static_cast<int>(d.arcs.size());
  std::vector<bool> used(narcs, false);
  for (int ai : dropped) used[ai] = true;
  std::vector<std::pair<HalfEdge, HalfEdge>> out_arcs;
  std::vector<EdgeLabel> out_labels;
  std::vector<EdgeLabel> new_loops;
  auto other_end = [&](int ai, HalfEdge h) {
    return d.arcs[ai].first == h ? d.arcs[ai].second : d.arcs[ai].first;
  };
  // Keep arcs not touching dead crossings; walk open chains from live ends.
  for (int ai = 0; ai < narcs; ++ai) {
    if (used[ai]) continue;
    auto [a, b] = d.arcs[ai];
    bool da = is_dead_h(a), db = is_dead_h(b);
    if (!da && !db) {
      used[ai] = true;
      out_arcs.push_back(d.arcs[ai]);
      out_labels.push_back(d.arc_label[ai]);
    }
  }
  for (int ai = 0; ai < narcs; ++ai) {
    if (used[ai]) continue;
    auto [a, b] = d.arcs[ai];
    bool da = is_dead_h(a), db = is_dead_h(b);
    if (da && db) continue;  // interior of a chain or a closed loop
    HalfEdge anchor = da ? b : a;
    HalfEdge cur = da ? a : b;
    EdgeLabel label = d.arc_label[ai];
    used[ai] = true;
    while (is_dead_h(cur)) {
      auto j = jn.find(cur);
      if (j == jn.end())
        throw Error("rewire: dangling half-edge " + std::to_string(cur));
      HalfEdge nxt = j->second;
      auto a2 = t.arc_of.find(nxt);
      if (a2 == t.arc_of.end() || used[a2->second])
        throw Error("rewire: join leads nowhere at " + std::to_string(nxt));
      if (!(d.arc_label[a2->second] == label))
        throw Error("rewire: label mismatch along strand");
      used[a2->second] = true;
      cur = other_end(a2->second, nxt);
    }
    out_arcs.emplace_back(anchor, cur);
    out_labels.push_back(label);
  }
  // Remaining unused arcs close up into free loops.
  for (int ai = 0; ai < narcs; ++ai) {
    if (used[ai]) continue;
    EdgeLabel label = d.arc_label[ai];
    used[ai] = true;
    HalfEdge start = d.arcs[ai].first;
    HalfEdge cur = d.arcs[ai].second;
    while (cur != start) {
      auto j = jn.find(cur);
      if (j == jn.end())
        throw Error("rewire: dangling half-edge " + std::to_string(cur));
      HalfEdge nxt = j->second;
      if (nxt == start) break;
      int ai2 = t.arc_of.at(nxt);
      if (used[ai2]) throw Error("rewire: tangled loop");
      if (!(d.arc_label[ai2] == label))
        throw Error("rewire: label mismatch along strand");
      used[ai2] = true;
      cur = other_end(ai2, nxt);
    }
    new_loops.push_back(label);
  }
  // Every half-edge of a dead crossing must be covered by a join or a drop.
  for (int cid : dead_set) {
    const Crossing* c = d.crossing_by_id(cid);
    if (!c) throw Error("rewire: no crossing " + std::to_string(cid));
    for (HalfEdge h : c->slot)
      if (!jn.count(h) && !gone.count(h))
        throw Error("rewire: uncovered half-edge " + std::to_string(h));
  }
  // Commit.
  std::vector<Crossing> keep;
  for (const auto& c : d.crossings)
    if (!dead_set.count(c.id)) keep.push_back(c);
  d.crossings = std::move(keep);
  for (auto& n : d.nodes) {
    std::vector<HalfEdge> rot;
    for (HalfEdge h : n.rot)
      if (!gone.count(h)) rot.push_back(h);
    n.rot = std::move(rot);
  }
  d.arcs = std::move(out_arcs);
  d.arc_label = std::move(out_labels);
  for (const EdgeLabel& l : new_loops) d.free_loops.push_back(l);
}

void splice_valence2_nodes(SpatialDiagram& d) {
  for (bool again = true; again;) {
    again = false;
    for (size_t ni = 0; ni < d.nodes.size(); ++ni) {
      if (d.nodes[ni].rot.size() != 2) continue;
      Topology t(d);
      HalfEdge h0 = d.nodes[ni].rot[0];
      HalfEdge h1 = d.nodes[ni].rot[1];
      int a0 = t.arc_of.at(h0);
      int a1 = t.arc_of.at(h1);
      if (a0 == a1) {
        // A loop hanging on this node alone becomes a free loop.
        d.free_loops.push_back(d.arc_label[a0]);
        d.arcs.erase(d.arcs.begin() + a0);
        d.arc_label.erase(d.arc_label.begin() + a0);
      } else {
        HalfEdge p = t.mate(h0);
        HalfEdge q = t.mate(h1);
        EdgeLabel l = std::min(d.arc_label[a0], d.arc_label[a1]);
        int hi = std::max(a0, a1), lo = std::min(a0, a1);
        d.arcs.erase(d.arcs.begin() + hi);
        d.arc_label.erase(d.arc_label.begin() + hi);
        d.arcs.erase(d.arcs.begin() + lo);
        d.arc_label.erase(d.arc_label.begin() + lo);
        d.arcs.emplace_back(p, q);
        d.arc_label.push_back(l);
      }
      d.nodes.erase(d.nodes.begin() + ni);
      again = true;
      break;
    }
  }
}

void delete_edge(SpatialDiagram& d, EdgeLabel label) {
  Topology t(d);
  std::vector<int> dead;
  std::vector<std::pair<HalfEdge, HalfEdge>> joins;
  for (const auto& c : d.crossings) {
    EdgeLabel lu = t.label_at(c.slot[0]);
    EdgeLabel lo = t.label_at(c.slot[1]);
    if (lu == label && lo == label) {
      dead.push_back(c.id);
    } else if (lu == label) {
      dead.push_back(c.id);
      joins.emplace_back(c.slot[1], c.slot[3]);
    } else if (lo == label) {
      dead.push_back(c.id);
      joins.emplace_back(c.slot[0], c.slot[2]);
    }
  }
  std::vector<int> drop;
  for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i)
    if (d.arc_label[i] == label) drop.push_back(i);
  rewire_remove(d, dead, joins, drop);
  std::vector<EdgeLabel> loops;
  for (const EdgeLabel& l : d.free_loops)
    if (!(l == label)) loops.push_back(l);
  d.free_loops = std::move(loops);
  // Nodes the deleted edge ran between may now be isolated.
  std::vector<GraphNode> keep_nodes;
  for (const auto& n : d.nodes)
    if (!n.rot.empty()) keep_nodes.push_back(n);
  d.nodes = std::move(keep_nodes);
  splice_valence2_nodes(d);
  d.family = Family{FamilyKind::Raw, 0, 0, 0};
}

void relabel_edge(SpatialDiagram& d, EdgeLabel from, EdgeLabel to) {
  for (auto& l : d.arc_label)
    if (l == from) l = to;
  for (auto& l : d.free_loops)
    if (l == from) l = to;
}

void renumber(SpatialDiagram& d) {
  std::map<HalfEdge, HalfEdge> hmap;
  int nh = 0;
  for (auto& c : d.crossings)
    for (HalfEdge& h : c.slot) {
      hmap[h] = nh;
      h = nh++;
    }
  for (auto& n : d.nodes)
    for (HalfEdge& h : n.rot) {
      hmap[h] = nh;
      h = nh++;
    }
  for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i)
    d.crossings[i].id = i;
  for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i) d.nodes[i].id = i;
  std::vector<std::pair<std::pair<HalfEdge, HalfEdge>, EdgeLabel>> rows;
  for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i) {
    HalfEdge a = hmap.at(d.arcs[i].first);
    HalfEdge b = hmap.at(d.arcs[i].second);
    rows.push_back({{std::min(a, b), std::max(a, b)}, d.arc_label[i]});
  }
  std::sort(rows.begin(), rows.end());
  d.arcs.clear();
  d.arc_label.clear();
  for (auto& [ab, l] : rows) {
    d.arcs.push_back(ab);
    d.arc_label.push_back(l);
  }
  std::sort(d.free_loops.begin(), d.free_loops.end());
}

namespace {

std::string encode_from(const SpatialDiagram& d, const Topology& t,
                        HalfEdge start, bool with_labels) {
  std::map<OwnerKey, std::pair<int, int>> disc;  // key -> {index, entry pos}
  std::vector<OwnerKey> order;
  auto discover = [&](const Topology::Attach& a) {
    OwnerKey k = owner_key(a);
    disc[k] = {static_cast<int>(order.size()), a.pos};
    order.push_back(k);
  };
  discover(t.attach(start));
  std::ostringstream os;
  for (size_t qi = 0; qi < order.size(); ++qi) {
    OwnerKey k = order[qi];
    auto [idx, entry] = disc[k];
    bool isx = (k.first == 0);
    int deg;
    if (isx) {
      deg = 4;
      os << 'X' << (entry % 2);
    } else {
      deg = static_cast<int>(d.node_by_id(k.second)->rot.size());
      os << 'V' << deg;
    }
    for (int s = 0; s < deg; ++s) {
      int pos = (entry + s) % deg;
      HalfEdge h = isx ? d.crossing_by_id(k.second)->slot[pos]
                       : d.node_by_id(k.second)->rot[pos];
      if (with_labels) os << '.' << t.label_at(h).str();
      HalfEdge q = t.mate(h);
      const auto& b = t.attach(q);
      OwnerKey bk = owner_key(b);
      auto it = disc.find(bk);
      if (it == disc.end()) {
        discover(b);
        os << 'n';
      } else {
        int degb = (bk.first == 0)
                       ? 4
                       : static_cast<int>(d.node_by_id(bk.second)->rot.size());
        int rel = (b.pos - it->second.second + degb) % degb;
        os << '(' << it->second.first << ',' << rel << ')';
      }
    }
    os << ';';
  }
  return os.str();
}

}  // namespace

std::string canonical_encoding(const SpatialDiagram& d, bool with_labels) {
  std::vector<std::string> parts;
  for (const SpatialDiagram& piece : split_components(d)) {
    if (piece.crossings.empty() && piece.nodes.empty()) {
      parts.push_back(with_labels ? "O." + piece.free_loops[0].str() : "O");
      continue;
    }
    Topology t(piece);
    std::string best;
    for (const auto& [h, p] : t.partner) {
      std::string e = encode_from(piece, t, h, with_labels);
      if (best.empty() || e < best) best = std::move(e);
    }
    parts.push_back(std::move(best));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += '#';
    out += p;
  }
  return out;
}

}  // namespace knotwork
