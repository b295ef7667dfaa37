#include "knotwork/gamma.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "knotwork/invariants.hpp"

namespace knotwork {

namespace {

std::pair<EdgeLabel, EdgeLabel> ordered(EdgeLabel a, EdgeLabel b) {
  if (b < a) std::swap(a, b);
  return {a, b};
}

using EdgePair = std::pair<EdgeLabel, EdgeLabel>;
using EdgeList = std::vector<EdgePair>;

// n blue then n red vertices, in label order.
std::vector<EdgeLabel> coloured_vertices(int n) {
  std::vector<EdgeLabel> v;
  for (int i = 1; i <= n; ++i) v.push_back({LabelFamily::X, i});
  for (int i = 1; i <= n; ++i) v.push_back({LabelFamily::Z, i});
  return v;
}

// A triangle through a mixed edge is always bicoloured; through a same-colour
// edge only when the third vertex has the other colour.
bool bicoloured_triangle_free(const std::vector<std::uint32_t>& adj, int n) {
  const int total = 2 * n;
  const std::uint32_t blue = (1u << n) - 1;
  for (int a = 0; a < total; ++a) {
    for (int b = a + 1; b < total; ++b) {
      if (!(adj[a] >> b & 1u)) continue;
      std::uint32_t common = adj[a] & adj[b];
      if ((a < n) == (b < n)) common &= a < n ? ~blue : blue;
      if (common) return false;
    }
  }
  return true;
}

void consider(int count, EdgeList edges, int& best, EdgeList& witness) {
  if (count < best) return;
  std::sort(edges.begin(), edges.end());
  if (count > best || edges < witness) {
    best = count;
    witness = std::move(edges);
  }
}

// Every graph on up to six vertices, directly.
void enumerate_all(int n, int& best, EdgeList& witness) {
  const std::vector<EdgeLabel> verts = coloured_vertices(n);
  const int total = 2 * n;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < total; ++a)
    for (int b = a + 1; b < total; ++b) pairs.emplace_back(a, b);
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::uint32_t> adj(total, 0);
    int count = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!(mask >> i & 1u)) continue;
      adj[pairs[i].first] |= 1u << pairs[i].second;
      adj[pairs[i].second] |= 1u << pairs[i].first;
      ++count;
    }
    if (count < best || !bicoloured_triangle_free(adj, n)) continue;
    EdgeList edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1u) {
        edges.emplace_back(verts[pairs[i].first], verts[pairs[i].second]);
      }
    }
    consider(count, std::move(edges), best, witness);
  }
}

// A bicoloured triangle always consists of one same-colour edge plus two
// mixed edges, so for a fixed mixed part the optimum simply adds every
// same-colour edge whose endpoints share no mixed neighbour. Enumerating the
// 2^(n^2) mixed parts is therefore exhaustive over all graphs.
void enumerate_by_mixed_part(int n, int& best, EdgeList& witness) {
  const std::vector<EdgeLabel> verts = coloured_vertices(n);
  const int total = 2 * n;
  std::vector<std::pair<int, int>> bip;
  for (int a = 0; a < n; ++a)
    for (int b = n; b < total; ++b) bip.emplace_back(a, b);
  for (std::uint32_t mask = 0; mask < (1u << bip.size()); ++mask) {
    std::vector<std::uint32_t> nb(total, 0);
    EdgeList edges;
    for (std::size_t i = 0; i < bip.size(); ++i) {
      if (!(mask >> i & 1u)) continue;
      nb[bip[i].first] |= 1u << bip[i].second;
      nb[bip[i].second] |= 1u << bip[i].first;
      edges.emplace_back(verts[bip[i].first], verts[bip[i].second]);
    }
    for (int side = 0; side < 2; ++side) {
      for (int a = side * n; a < (side + 1) * n; ++a) {
        for (int b = a + 1; b < (side + 1) * n; ++b) {
          if ((nb[a] & nb[b]) == 0) edges.emplace_back(verts[a], verts[b]);
        }
      }
    }
    const int count = static_cast<int>(edges.size());
    consider(count, std::move(edges), best, witness);
  }
}

std::string trim_number(double x) {
  if (x == static_cast<long long>(x)) {
    return std::to_string(static_cast<long long>(x));
  }
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

bool GammaGraph::adjacent(const EdgeLabel& a, const EdgeLabel& b) const {
  return edges.count(ordered(a, b)) > 0;
}

GammaGraph gamma(const SpatialDiagram& d) {
  require_valid(d, "gamma");
  GammaGraph g;
  for (const EdgeLabel& l : edge_labels(d)) {
    if (l.fam == LabelFamily::X || l.fam == LabelFamily::Z) {
      g.vertices.push_back(l);
    }
  }
  const auto matrix = crossing_matrix(d);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      const EdgeLabel& a = g.vertices[i];
      const EdgeLabel& b = g.vertices[j];
      if (matrix.at(a).at(b) == 0) g.edges.insert({a, b});
    }
  }
  return g;
}

std::optional<std::array<EdgeLabel, 3>> find_bicoloured_triangle(
    const GammaGraph& g) {
  const auto& v = g.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (!g.adjacent(v[i], v[j])) continue;
      for (std::size_t k = j + 1; k < v.size(); ++k) {
        if (!g.adjacent(v[i], v[k]) || !g.adjacent(v[j], v[k])) continue;
        if (v[i].fam == v[j].fam && v[j].fam == v[k].fam) continue;
        return std::array<EdgeLabel, 3>{v[i], v[j], v[k]};
      }
    }
  }
  return std::nullopt;
}

ExtremalResult extremal_enumeration(int n) {
  if (n < 1 || n > 4) {
    throw Error("extremal_enumeration: n must be between 1 and 4");
  }
  ExtremalResult r;
  r.n = n;
  r.max_edges = -1;
  if (n <= 3) {
    enumerate_all(n, r.max_edges, r.witness);
  } else {
    enumerate_by_mixed_part(n, r.max_edges, r.witness);
  }
  return r;
}

std::string extremal_report(const std::vector<ExtremalResult>& rows) {
  std::ostringstream os;
  os << "n max_edges bound witness\n";
  for (const ExtremalResult& r : rows) {
    os << r.n << ' ' << r.max_edges << ' ' << trim_number(r.bound()) << ' ';
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
      if (i) os << ',';
      os << r.witness[i].first.str() << '-' << r.witness[i].second.str();
    }
    if (r.witness.empty()) os << '-';
    os << '\n';
  }
  return os.str();
}

TriangleHypothesisReport check_triangle_hypothesis(const SpatialDiagram& d,
                                                   const std::string& k1,
                                                   const std::string& k2) {
  if (d.family.kind != FamilyKind::ThetaN) {
    throw Error("check_triangle_hypothesis requires a theta-n diagram");
  }
  TriangleHypothesisReport r;
  r.n = d.family.n;
  r.crossings = static_cast<int>(d.crossings.size());
  r.triangle = find_bicoloured_triangle(gamma(d));
  r.has_triangle = r.triangle.has_value();

  const KnotTable& table = KnotTable::instance();
  const TableEntry* e1 = table.find(k1);
  const TableEntry* e2 = table.find(k2);
  const auto c12 = table.sum_crossing_number(sum_name({k1, k2}));
  if (!e1 || !e2 || !c12) {
    r.status = "unknown";
    return r;
  }
  const int c1 = e1->crossing_number;
  const int c2 = e2->crossing_number;
  r.budget = r.n * (c1 + c2);
  r.threshold = 2 * (c1 + c2 - *c12) + 1;
  r.within_budget = r.crossings <= r.budget;
  r.forced = r.within_budget && r.n > r.threshold;
  r.counterexample = r.forced && !r.has_triangle;
  return r;
}

}  // namespace knotwork
