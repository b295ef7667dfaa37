#include "knotwork/invariants.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <mutex>
#include <sstream>

namespace knotwork {

namespace {

long long checked_add(long long a, long long b) {
  long long s = 0;
  if (__builtin_add_overflow(a, b, &s)) {
    throw Error("polynomial coefficient overflow");
  }
  return s;
}

long long checked_mul(long long a, long long b) {
  long long p = 0;
  if (__builtin_mul_overflow(a, b, &p)) {
    throw Error("polynomial coefficient overflow");
  }
  return p;
}

}  // namespace

LaurentPoly LaurentPoly::one() { return term(1, 0); }

LaurentPoly LaurentPoly::term(long long coeff, int exponent) {
  LaurentPoly p;
  p.add(exponent, coeff);
  return p;
}

LaurentPoly& LaurentPoly::add(int exponent, long long coeff) {
  if (coeff == 0) return *this;
  auto it = terms_.emplace(exponent, 0).first;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      out.add(e1 + e2, checked_mul(c1, c2));
    }
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(int delta) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add(e + delta, c);
  return out;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add(-e, c);
  return out;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw Error("polynomial power must be non-negative");
  LaurentPoly out = one();
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    os << c << '*' << var << '^' << e;
    first = false;
  }
  return os.str();
}

namespace {

LaurentPoly loop_weight() {  // -A^2 - A^-2
  return LaurentPoly::term(-1, 2) + LaurentPoly::term(-1, -2);
}

}  // namespace

LaurentPoly kauffman_bracket(const SpatialDiagram& d) {
  require_valid(d, "kauffman_bracket");
  if (!d.nodes.empty()) {
    throw Error("kauffman bracket requires a knot or link diagram");
  }
  const int c = int(d.crossings.size());
  if (c > kBracketCrossingLimit) {
    throw Error("kauffman bracket limited to " +
                std::to_string(kBracketCrossingLimit) + " crossings (got " +
                std::to_string(c) + ")");
  }
  const int base_loops = int(d.free_loops.size());
  if (c == 0) {
    if (base_loops == 0) throw Error("kauffman bracket of an empty diagram");
    return loop_weight().pow(base_loops - 1);
  }

  // Dense half-edge ids, arc mates, and per-crossing slot ids.
  std::vector<HalfEdge> hs;
  hs.reserve(2 * d.arcs.size());
  for (const auto& [u, v] : d.arcs) {
    hs.push_back(u);
    hs.push_back(v);
  }
  std::sort(hs.begin(), hs.end());
  auto dense = [&hs](HalfEdge h) {
    return int(std::lower_bound(hs.begin(), hs.end(), h) - hs.begin());
  };
  const int nh = int(hs.size());
  std::vector<int> mate(nh);
  for (const auto& [u, v] : d.arcs) {
    mate[dense(u)] = dense(v);
    mate[dense(v)] = dense(u);
  }
  std::vector<std::array<int, 4>> slot(c);
  for (int k = 0; k < c; ++k) {
    for (int p = 0; p < 4; ++p) slot[k][p] = dense(d.crossings[k].slot[p]);
  }

  // Walk the loops of every smoothing state. Each loop is covered by exactly
  // two orbits of h -> partner(mate(h)), one per direction.
  std::map<std::pair<int, int>, long long> weight;  // (a - b, loops) -> count
  std::vector<int> partner(nh);
  std::vector<int> seen(nh, -1);
  int max_loops = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t(1) << c); ++s) {
    for (int k = 0; k < c; ++k) {
      const auto& sl = slot[k];
      if (s >> k & 1) {  // B-smoothing
        partner[sl[0]] = sl[1];
        partner[sl[1]] = sl[0];
        partner[sl[2]] = sl[3];
        partner[sl[3]] = sl[2];
      } else {  // A-smoothing
        partner[sl[1]] = sl[2];
        partner[sl[2]] = sl[1];
        partner[sl[3]] = sl[0];
        partner[sl[0]] = sl[3];
      }
    }
    int orbits = 0;
    for (int h = 0; h < nh; ++h) {
      if (seen[h] == int(s)) continue;
      ++orbits;
      for (int cur = h; seen[cur] != int(s); cur = partner[mate[cur]]) {
        seen[cur] = int(s);
      }
    }
    const int loops = orbits / 2 + base_loops;
    const int b = std::popcount(s);
    ++weight[{c - 2 * b, loops}];
    max_loops = std::max(max_loops, loops);
  }

  std::vector<LaurentPoly> dpow(max_loops);
  dpow[0] = LaurentPoly::one();
  for (int k = 1; k < max_loops; ++k) dpow[k] = dpow[k - 1] * loop_weight();
  LaurentPoly total;
  for (const auto& [key, count] : weight) {
    total = total + LaurentPoly::term(count, key.first) * dpow[key.second - 1];
  }
  return total;
}

LaurentPoly jones(const SpatialDiagram& d) {
  const LaurentPoly br = kauffman_bracket(d);
  const int w = d.crossings.empty() ? 0 : writhe(d);
  LaurentPoly f = br.shifted(-3 * w);
  if (w % 2 != 0) f = LaurentPoly::term(-1, 0) * f;  // (-1)^w
  LaurentPoly out;
  for (const auto& [e, coeff] : f.terms()) {
    if (e % 4 != 0) throw Error("jones: bracket exponent not divisible by 4");
    out.add(-e / 4, coeff);
  }
  return out;
}

LaurentPoly jones_cached(const SpatialDiagram& d) {
  static std::mutex mu;
  static std::map<std::string, LaurentPoly> cache;
  const std::string key = canonical_encoding(d, /*with_labels=*/false);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  LaurentPoly value = jones(d);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(value)).first->second;
}

namespace {

std::vector<std::array<int, 4>> table_pd(const std::string& name) {
  if (name == "3_1") {
    return {{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}};
  }
  if (name == "4_1") {
    return {{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}};
  }
  if (name == "5_1") {
    return {{2, 8, 3, 7},
            {4, 10, 5, 9},
            {6, 2, 7, 1},
            {8, 4, 9, 3},
            {10, 6, 1, 5}};
  }
  if (name == "5_2") {
    return {{1, 4, 2, 5},
            {3, 8, 4, 9},
            {5, 10, 6, 1},
            {9, 6, 10, 7},
            {7, 2, 8, 3}};
  }
  throw Error("no stored diagram for " + name);
}

}  // namespace

KnotTable::KnotTable() {
  auto add = [this](const std::string& name, SpatialDiagram dia, int cn) {
    if (int(dia.crossings.size()) != cn) {
      throw Error("table diagram for " + name + " has the wrong size");
    }
    dia.family = Family{FamilyKind::Knot, 0, 0, 0};
    LaurentPoly v = jones(dia);
    entries_.push_back(TableEntry{name, std::move(dia), cn, std::move(v)});
  };
  SpatialDiagram unknot;
  unknot.free_loops = {EdgeLabel{}};
  add("unknot", unknot, 0);
  for (const auto& [name, cn] :
       std::vector<std::pair<std::string, int>>{
           {"3_1", 3}, {"4_1", 4}, {"5_1", 5}, {"5_2", 5}}) {
    SpatialDiagram dia = from_pd(table_pd(name));
    add(name, dia, cn);
    if (name != "4_1") add(name + "m", mirror(dia), cn);  // 4_1 is amphichiral
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const TableEntry& a, const TableEntry& b) {
              return a.name < b.name;
            });
}

const KnotTable& KnotTable::instance() {
  static const KnotTable table;
  return table;
}

const TableEntry* KnotTable::find(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

const TableEntry& KnotTable::at(const std::string& name) const {
  const TableEntry* e = find(name);
  if (!e) throw Error("unknown table knot: " + name);
  return *e;
}

std::optional<int> KnotTable::sum_crossing_number(
    const std::string& name) const {
  int total = 0;
  std::size_t start = 0;
  while (start <= name.size()) {
    const std::size_t stop = std::min(name.find('#', start), name.size());
    const TableEntry* e = find(name.substr(start, stop - start));
    if (!e) return std::nullopt;
    total += e->crossing_number;
    start = stop + 1;
  }
  return total;
}

std::string sum_name(std::vector<std::string> factors) {
  std::sort(factors.begin(), factors.end());
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += '#';
    out += f;
  }
  return out;
}

namespace {

// Jones values of all connected sums of up to four table knots. Ambiguous
// values map to "unknown".
const std::map<LaurentPoly, std::string>& identification_map() {
  static const std::map<LaurentPoly, std::string> table = [] {
    std::map<LaurentPoly, std::string> out;
    auto record = [&out](const LaurentPoly& p, const std::string& name) {
      auto [it, fresh] = out.emplace(p, name);
      if (!fresh && it->second != name) it->second = "unknown";
    };
    const auto& entries = KnotTable::instance().entries();
    std::vector<const TableEntry*> knots;
    for (const auto& e : entries) {
      if (e.name == "unknot") {
        record(e.jones, e.name);
      } else {
        knots.push_back(&e);
      }
    }
    const int nk = int(knots.size());
    struct Item {
      LaurentPoly jones;
      std::vector<std::string> factors;
    };
    std::vector<Item> frontier{{LaurentPoly::one(), {}}};
    for (int depth = 1; depth <= 4; ++depth) {
      std::vector<Item> next;
      for (const auto& item : frontier) {
        const int lowest =
            item.factors.empty()
                ? 0
                : int(std::find_if(knots.begin(), knots.end(),
                                   [&](const TableEntry* e) {
                                     return e->name == item.factors.back();
                                   }) -
                      knots.begin());
        for (int i = lowest; i < nk; ++i) {
          Item grown;
          grown.jones = item.jones * knots[i]->jones;
          grown.factors = item.factors;
          grown.factors.push_back(knots[i]->name);
          record(grown.jones, sum_name(grown.factors));
          next.push_back(std::move(grown));
        }
      }
      frontier = std::move(next);
    }
    return out;
  }();
  return table;
}

}  // namespace

std::string identify(const SpatialDiagram& d) {
  if (!d.nodes.empty()) throw Error("identify requires a knot diagram");
  if (strand_circuits(d).size() + d.free_loops.size() != 1) return "unknown";
  const LaurentPoly p = jones_cached(d);
  const auto& table = identification_map();
  const auto it = table.find(p);
  return it == table.end() ? "unknown" : it->second;
}

}  // namespace knotwork
