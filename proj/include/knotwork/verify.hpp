#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotwork/diagram.hpp"

namespace knotwork {

// One checked statement: an integer comparison evaluated on witness diagrams.
// The diagrams that went into the check are embedded in serialized form, so
// every verdict can be recomputed offline from the report alone.
struct InequalityReport {
  std::string id;        // statement identifier ("E1", "C31", "L51-cut", ...)
  long long lhs = 0;
  long long rhs = 0;
  std::string relation;  // ">=", "<=", "==" — or "skip" with a notice
  bool pass = false;
  std::string notice;    // skip reasons, fallbacks taken, failure guidance
  std::vector<std::pair<std::string, std::string>> inputs;  // name, .sgd text

  // Machine-readable line: "STMT <id> LHS <lhs> RHS <rhs> VERDICT <pass|fail>".
  std::string stmt_line() const;
  // Human-readable rendering: the statement line, the relation spelled out,
  // any notice, and the embedded inputs as indented .sgd blocks.
  std::string str() const;
};

bool all_pass(const std::vector<InequalityReport>& reports);
std::string render_reports(const std::vector<InequalityReport>& reports);

// E1 on a theta-curve diagram: the crossings among the x- and z-edges alone
// already bound the crossing number of k1 # k2, because deleting the y-edge
// leaves a diagram of that sum.  checks  xx + xz + zz >= c(k1 # k2).
std::vector<InequalityReport> verify_eq1(const SpatialDiagram& d,
                                         const std::string& k1,
                                         const std::string& k2);

// E-ineq and E-prop on a theta-curve diagram: summing the constituent bounds
// for x∪z = k1 # k2, x∪y = k1 and y∪z = k2 counts every crossing at most
// twice.  checks  2·crossings >= c(k1#k2) + c(k1) + c(k2) + xy + xz + yz
// and the weaker form without the mixed terms.  A theta of degree 2 (no
// y-edge) is degenerate for these statements and is skipped with a notice.
std::vector<InequalityReport> verify_ineq(const SpatialDiagram& d,
                                          const std::string& k1,
                                          const std::string& k2);

// C31 on a 2n-theta diagram: every pairing of the x-edges with the z-edges
// gives n disjoint copies of k1 # k2, so  crossings >= n·c(k1 # k2).
// For constructor-built diagrams (`constructor_diagram`), additionally P32,
// crossings >= c(k1^n # k2^n), and the construction ceiling
// crossings <= n·(c(k1) + c(k2)) (id "C31-ub").
std::vector<InequalityReport> verify_theta_n(const SpatialDiagram& d,
                                             const std::string& k1,
                                             const std::string& k2, int n,
                                             bool constructor_diagram = true);

// P43: doubles a diagram of k1 # k2 into n parallel strands joined at two
// 2n-valent nodes and confirms the witness behind the square bound — the
// doubled diagram has exactly n² times the crossings of the input (id "P43")
// and its two-edge constituents qualify it for the doubled family
// (id "P43-member": every x/z pair is k1 # k2, no same-colour pair is the
// unknot or the double sum).  When the minimal sum diagram admits no two-arc
// partition, a non-minimal diagram grown by one R2 move is used instead and
// the report says so.  With n = 1 the witness is the input diagram itself.
std::vector<InequalityReport> verify_square(const std::string& k1,
                                            const std::string& k2, int n);

// L51 on ladder diagrams: deleting the i-th crossing-free vertical wall can
// only lose crossings (id "L51"), and cutting along it splits the ladder into
// two smaller ladders whose crossings add up exactly (id "L51-cut").
std::vector<InequalityReport> verify_oplus(int n, int k, int i,
                                           const std::string& k1,
                                           const std::string& k2);

// Runs the whole suite on constructor-built witnesses for the pair (k1, k2):
// eq1 and ineq on the theta curve, theta-n at the given n, square at the
// given n, and oplus at (n, k, i).  The independent groups run concurrently
// and are joined in a fixed order.
std::vector<InequalityReport> verify_all(const std::string& k1,
                                         const std::string& k2, int n, int k,
                                         int i);

}  // namespace knotwork
