#include "knotwork/gauss.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace knotwork {

std::string GaussCode::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < visits.size(); ++i) {
    if (i) os << ',';
    os << (visits[i].over ? 'O' : 'U') << visits[i].label
       << (visits[i].sign > 0 ? '+' : '-');
  }
  return os.str();
}

std::vector<StrandPassage> strand_walk(const SpatialDiagram& d) {
  require_valid(d, "strand_walk");
  if (!d.nodes.empty() || component_count(d) != 1) {
    throw Error("gauss code requires a single-component knot diagram");
  }
  std::vector<StrandPassage> walk;
  if (d.crossings.empty()) return walk;  // 0-crossing unknot

  Topology t(d);
  const Crossing& start = *std::min_element(
      d.crossings.begin(), d.crossings.end(),
      [](const Crossing& a, const Crossing& b) { return a.id < b.id; });
  const HalfEdge first = t.mate(start.slot[2]);  // under-strand exit
  HalfEdge enter = first;
  do {
    const auto& a = t.attach(enter);
    walk.push_back({a.owner, a.pos, enter});
    const Crossing& c = *d.crossing_by_id(a.owner);
    enter = t.mate(c.slot[(a.pos + 2) % 4]);
  } while (enter != first);
  return walk;
}

GaussCode gauss_code(const SpatialDiagram& d) {
  const auto walk = strand_walk(d);
  GaussCode code;
  if (walk.empty()) return code;
  const auto signs = crossing_signs(d);
  std::map<int, int> label_of;
  for (const auto& p : walk) {
    GaussVisit v;
    v.crossing = p.crossing;
    v.over = (p.entry_pos % 2) == 1;
    v.sign = signs.at(p.crossing);
    v.label = label_of.emplace(p.crossing, int(label_of.size()) + 1).first->second;
    code.visits.push_back(v);
  }
  return code;
}

std::vector<int> label_sequence(const GaussCode& c) {
  std::vector<int> out;
  out.reserve(c.visits.size());
  for (const auto& v : c.visits) out.push_back(v.label);
  return out;
}

namespace {

int twice_count(const std::vector<int>& labels, int from, int to) {
  const int len = int(labels.size());
  std::map<int, int> seen;
  for (int i = from; i != to; i = (i + 1) % len) ++seen[labels[i]];
  int twice = 0;
  for (const auto& [label, k] : seen) {
    (void)label;
    if (k >= 2) ++twice;
  }
  return twice;
}

}  // namespace

std::pair<int, int> partition_self_counts(const GaussCode& c,
                                          const CodePartition& p) {
  const auto labels = label_sequence(c);
  if (labels.empty()) return {0, 0};
  const int len = int(labels.size());
  const int first = ((p.first % len) + len) % len;   // cut points live on the
  const int second = ((p.second % len) + len) % len;  // cyclic sequence
  return {twice_count(labels, first, second),
          twice_count(labels, second, first)};
}

bool is_double_run(const GaussCode& c) {
  const auto w = label_sequence(c);
  const int len = int(w.size());
  if (len == 0) return true;
  if (len % 2) return false;
  const int half = len / 2;
  for (int i = 0; i < len; ++i) {
    if (w[i] != w[(i + half) % len]) return false;
  }
  return true;
}

std::optional<CodePartition> find_partition(const GaussCode& c) {
  const int len = int(c.visits.size());
  std::optional<CodePartition> best;
  int best_max = 0;
  for (int i = 0; i < len; ++i) {
    for (int j = i + 1; j < len; ++j) {
      const CodePartition p{i, j};
      const auto [s1, s2] = partition_self_counts(c, p);
      if (s1 == 0 || s2 == 0) continue;
      const int m = std::max(s1, s2);
      if (!best || m < best_max) {
        best = p;
        best_max = m;
      }
    }
  }
  return best;
}

}  // namespace knotwork
