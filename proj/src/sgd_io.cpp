#include "knotwork/sgd_io.hpp"

#include <fstream>
#include <sstream>

namespace knotwork {

std::string to_sgd(const SpatialDiagram& d) {
  std::ostringstream os;
  os << "F " << d.family.str() << "\n";
  for (const auto& c : d.crossings) {
    os << "X " << c.id;
    for (HalfEdge h : c.slot) os << " " << h;
    os << "\n";
  }
  for (const auto& n : d.nodes) {
    os << "V " << n.id;
    for (HalfEdge h : n.rot) os << " " << h;
    os << "\n";
  }
  for (const auto& [a, b] : d.arcs) os << "P " << a << " " << b << "\n";
  for (size_t i = 0; i < d.arc_label.size(); ++i)
    os << "L " << i << " " << d.arc_label[i].str() << "\n";
  for (const auto& l : d.free_loops) os << "O " << l.str() << "\n";
  return os.str();
}

SpatialDiagram parse_sgd(const std::string& text) {
  SpatialDiagram d;
  std::map<int, EdgeLabel> labels;
  bool family_seen = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    auto fail = [&](const std::string& why) -> Error {
      return Error("sgd line " + std::to_string(lineno) + ": " + why);
    };
    if (tag == "X") {
      Crossing c;
      if (!(ls >> c.id >> c.slot[0] >> c.slot[1] >> c.slot[2] >> c.slot[3]))
        throw fail("bad X line");
      d.crossings.push_back(c);
    } else if (tag == "V") {
      GraphNode n;
      if (!(ls >> n.id)) throw fail("bad V line");
      HalfEdge h;
      while (ls >> h) n.rot.push_back(h);
      if (n.rot.empty()) throw fail("node with no half-edges");
      d.nodes.push_back(n);
    } else if (tag == "P") {
      HalfEdge a, b;
      if (!(ls >> a >> b)) throw fail("bad P line");
      d.arcs.emplace_back(a, b);
    } else if (tag == "L") {
      int idx;
      std::string lab;
      if (!(ls >> idx >> lab)) throw fail("bad L line");
      if (!labels.emplace(idx, EdgeLabel::parse(lab)).second)
        throw fail("arc " + std::to_string(idx) + " labeled twice");
    } else if (tag == "O") {
      std::string lab;
      if (!(ls >> lab)) throw fail("bad O line");
      d.free_loops.push_back(EdgeLabel::parse(lab));
    } else if (tag == "F") {
      if (family_seen) throw fail("second F line");
      family_seen = true;
      std::string kind;
      if (!(ls >> kind)) throw fail("bad F line");
      Family f;
      if (kind == "knot") {
        f.kind = FamilyKind::Knot;
      } else if (kind == "theta") {
        f.kind = FamilyKind::Theta;
      } else if (kind == "theta-n") {
        f.kind = FamilyKind::ThetaN;
        if (!(ls >> f.n)) throw fail("theta-n needs n");
      } else if (kind == "oplus") {
        f.kind = FamilyKind::Oplus;
        if (!(ls >> f.n >> f.k)) throw fail("oplus needs n k");
      } else if (kind == "G") {
        f.kind = FamilyKind::Grid;
        if (!(ls >> f.n >> f.k >> f.i)) throw fail("G needs n k i");
      } else if (kind == "raw") {
        f.kind = FamilyKind::Raw;
      } else {
        throw fail("unknown family " + kind);
      }
      d.family = f;
    } else {
      throw fail("unknown tag " + tag);
    }
  }
  for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i) {
    auto it = labels.find(i);
    if (it == labels.end())
      throw Error("sgd: unlabeled arc " + std::to_string(i));
    d.arc_label.push_back(it->second);
    labels.erase(it);
  }
  if (!labels.empty())
    throw Error("sgd: label for missing arc " +
                std::to_string(labels.begin()->first));
  return d;
}

SpatialDiagram load_sgd(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_sgd(ss.str());
}

void save_sgd(const SpatialDiagram& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << to_sgd(d);
}

}  // namespace knotwork
