#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotwork/diagram.hpp"

namespace knotwork {

// Laurent polynomial with exact integer coefficients. Overflow throws instead
// of wrapping.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly one();
  static LaurentPoly term(long long coeff, int exponent);

  const std::map<int, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly& add(int exponent, long long coeff);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  auto operator<=>(const LaurentPoly&) const = default;

  LaurentPoly shifted(int delta) const;  // multiply by var^delta
  LaurentPoly inverted() const;          // var -> var^-1
  LaurentPoly pow(int k) const;

  // "c0*t^e0 + c1*t^e1 + ...", exponents ascending; "0" when empty.
  std::string str(const std::string& var = "t") const;

 private:
  std::map<int, long long> terms_;
};

inline constexpr int kBracketCrossingLimit = 22;

// Kauffman bracket in the variable A, by the full smoothing-state sum.
// Accepts knot and link diagrams (no graph nodes); loops weigh -A^2 - A^-2.
LaurentPoly kauffman_bracket(const SpatialDiagram& d);

// (-A)^(-3w) times the bracket, rewritten in t = A^-4. Defined for knots;
// throws when an exponent is not divisible by four (even-component links).
LaurentPoly jones(const SpatialDiagram& d);

// jones() with a process-wide cache keyed by the label-free canonical
// encoding of the diagram.
LaurentPoly jones_cached(const SpatialDiagram& d);

struct TableEntry {
  std::string name;
  SpatialDiagram diagram;
  int crossing_number = 0;
  LaurentPoly jones;
};

// Built-in knots with known minimal diagrams: unknot, 3_1, 4_1, 5_1, 5_2 and
// the mirrors that are distinct (suffix "m"). Jones values are computed from
// the stored diagrams at construction.
class KnotTable {
 public:
  KnotTable();
  static const KnotTable& instance();

  const std::vector<TableEntry>& entries() const { return entries_; }
  const TableEntry* find(const std::string& name) const;
  const TableEntry& at(const std::string& name) const;

  // Crossing number of a '#'-separated sum of table names. All the table
  // knots are alternating, so crossing numbers add. Empty when any factor is
  // not in the table.
  std::optional<int> sum_crossing_number(const std::string& name) const;

 private:
  std::vector<TableEntry> entries_;
};

// '#'-join of the factor names, sorted.
std::string sum_name(std::vector<std::string> factors);

// Name the knot by its Jones polynomial, matched against the table closed
// under connected sums of up to four factors. Returns "unknown" when nothing
// matches, when the polynomial is ambiguous, or for links.
std::string identify(const SpatialDiagram& d);

}  // namespace knotwork
