#include "knotwork/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace knotwork {

namespace {

constexpr double kSize = 640.0;
constexpr double kMargin = 40.0;
constexpr double kPi = 3.14159265358979323846;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Layout vertices: one per crossing, one per node, two per arc (subdivision
// points), chained owner — sub — sub — owner along every arc.
struct Layout {
  std::map<int, int> crossing_vertex;  // crossing id -> vertex
  std::map<int, int> node_vertex;      // node id -> vertex
  int sub_base = 0;                    // arc i owns vertices sub_base + 2i, +1
  std::vector<std::vector<int>> adjacency;
  std::vector<Point> position;
};

int owner_vertex(const Layout& l, const Topology& t, HalfEdge h) {
  const Topology::Attach a = t.attach(h);
  return a.at_crossing ? l.crossing_vertex.at(a.owner)
                       : l.node_vertex.at(a.owner);
}

// Subdivision vertices of the arc of `h`, ordered walking away from `h`.
std::pair<int, int> subs_from(const Layout& l, const SpatialDiagram& d,
                              const Topology& t, HalfEdge h) {
  const int arc = t.arc_of.at(h);
  const int s = l.sub_base + 2 * arc;
  return d.arcs[arc].first == h ? std::make_pair(s, s + 1)
                                : std::make_pair(s + 1, s);
}

Layout make_layout(const SpatialDiagram& d, const Topology& t) {
  Layout l;
  int next = 0;
  for (const Crossing& c : d.crossings) l.crossing_vertex[c.id] = next++;
  for (const GraphNode& n : d.nodes) l.node_vertex[n.id] = next++;
  l.sub_base = next;
  next += 2 * static_cast<int>(d.arcs.size());
  l.adjacency.resize(next);
  l.position.resize(next);

  const auto join = [&](int a, int b) {
    l.adjacency[a].push_back(b);
    l.adjacency[b].push_back(a);
  };
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    const int s = l.sub_base + 2 * static_cast<int>(i);
    join(owner_vertex(l, t, d.arcs[i].first), s);
    join(s, s + 1);
    join(s + 1, owner_vertex(l, t, d.arcs[i].second));
  }
  return l;
}

void place(Layout& l, const SpatialDiagram& d, const Topology& t) {
  if (l.position.empty()) return;

  // Pin the largest face to a circle; walk its boundary through the
  // subdivision points so consecutive pinned vertices are adjacent.
  const auto fs = faces(d);
  std::vector<int> outer;
  if (!fs.empty()) {
    const auto& big = *std::max_element(
        fs.begin(), fs.end(),
        [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (HalfEdge h : big) {
      outer.push_back(owner_vertex(l, t, h));
      const auto [s1, s2] = subs_from(l, d, t, h);
      outer.push_back(s1);
      outer.push_back(s2);
    }
  }
  const double r = kSize / 2.0 - kMargin;
  std::set<int> pinned;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (!pinned.insert(outer[i]).second) continue;  // first angle wins
    const double a = 2.0 * kPi * static_cast<double>(i) /
                     static_cast<double>(outer.size());
    l.position[outer[i]] = {kSize / 2.0 + r * std::cos(a),
                            kSize / 2.0 + r * std::sin(a)};
  }
  for (std::size_t v = 0; v < l.position.size(); ++v) {
    if (!pinned.count(static_cast<int>(v))) {
      l.position[v] = {kSize / 2.0, kSize / 2.0};
    }
  }

  // Barycentric relaxation of the unpinned vertices.
  for (int round = 0; round < 600; ++round) {
    double moved = 0.0;
    for (std::size_t v = 0; v < l.position.size(); ++v) {
      if (pinned.count(static_cast<int>(v)) || l.adjacency[v].empty()) {
        continue;
      }
      Point mean;
      for (int u : l.adjacency[v]) {
        mean.x += l.position[u].x;
        mean.y += l.position[u].y;
      }
      mean.x /= static_cast<double>(l.adjacency[v].size());
      mean.y /= static_cast<double>(l.adjacency[v].size());
      moved += std::abs(mean.x - l.position[v].x) +
               std::abs(mean.y - l.position[v].y);
      l.position[v] = mean;
    }
    if (moved < 1e-9) break;
  }
}

std::string fmt(double value) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (std::abs(value) < 0.005 ? 0.0 : value);
  return os.str();
}

void polyline(std::ostringstream& os, const std::vector<Point>& pts,
              const std::string& stroke, double width) {
  os << "  <path d=\"M " << fmt(pts[0].x) << " " << fmt(pts[0].y);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    os << " L " << fmt(pts[i].x) << " " << fmt(pts[i].y);
  }
  os << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
     << fmt(width) << "\" stroke-linecap=\"round\" stroke-linejoin=\"round\"/>"
     << "\n";
}

}  // namespace

std::string to_svg(const SpatialDiagram& d) {
  require_valid(d, "to_svg");
  const Topology t(d);
  Layout l = make_layout(d, t);
  place(l, d, t);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
     << "width=\"" << fmt(kSize) << "\" height=\"" << fmt(kSize)
     << "\" viewBox=\"0 0 " << fmt(kSize) << " " << fmt(kSize) << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // strands
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    const int s = l.sub_base + 2 * static_cast<int>(i);
    const std::vector<Point> pts = {
        l.position[owner_vertex(l, t, d.arcs[i].first)], l.position[s],
        l.position[s + 1], l.position[owner_vertex(l, t, d.arcs[i].second)]};
    polyline(os, pts, "black", 2.5);
  }

  // over-strands drawn last over a background halo, breaking the strand below
  for (const Crossing& c : d.crossings) {
    const Point center = l.position[l.crossing_vertex.at(c.id)];
    const auto [a1, a2] = subs_from(l, d, t, c.slot[1]);
    const auto [b1, b2] = subs_from(l, d, t, c.slot[3]);
    (void)a2;
    (void)b2;
    const std::vector<Point> over = {l.position[a1], center, l.position[b1]};
    polyline(os, over, "white", 9.0);
    polyline(os, over, "black", 2.5);
  }

  // nodes
  for (const GraphNode& n : d.nodes) {
    const Point p = l.position[l.node_vertex.at(n.id)];
    os << "  <circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
       << "\" r=\"5\" fill=\"black\"/>\n";
  }

  // one label per edge, at the midpoint of its first arc
  std::set<std::string> labelled;
  for (std::size_t i = 0; i < d.arc_label.size(); ++i) {
    const std::string name = d.arc_label[i].str();
    if (!labelled.insert(name).second) continue;
    const int s = l.sub_base + 2 * static_cast<int>(i);
    const Point mid = {(l.position[s].x + l.position[s + 1].x) / 2.0,
                       (l.position[s].y + l.position[s + 1].y) / 2.0};
    os << "  <text x=\"" << fmt(mid.x + 6) << "\" y=\"" << fmt(mid.y - 6)
       << "\" font-family=\"sans-serif\" font-size=\"14\">" << name
       << "</text>\n";
  }

  // free loops as a stack of circles in the top-left corner
  for (std::size_t i = 0; i < d.free_loops.size(); ++i) {
    const double cy = kMargin + 30.0 * static_cast<double>(i);
    os << "  <circle cx=\"" << fmt(kMargin) << "\" cy=\"" << fmt(cy)
       << "\" r=\"10\" fill=\"none\" stroke=\"black\" stroke-width=\"2.5\"/>"
       << "\n";
    os << "  <text x=\"" << fmt(kMargin + 16) << "\" y=\"" << fmt(cy + 5)
       << "\" font-family=\"sans-serif\" font-size=\"14\">"
       << d.free_loops[i].str() << "</text>\n";
  }

  os << "</svg>\n";
  return os.str();
}

void save_svg(const SpatialDiagram& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("save_svg: cannot write " + path);
  out << to_svg(d);
}

}  // namespace knotwork
