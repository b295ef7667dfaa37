#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "fixtures.hpp"
#include "knotwork/gauss.hpp"

using namespace knotwork;
using namespace kwtest;

namespace {

GaussCode make_code(const std::vector<int>& labels) {
  GaussCode c;
  std::map<int, int> seen;
  for (int label : labels) {
    GaussVisit v;
    v.label = label;
    v.over = seen[label]++ == 0;
    v.sign = 1;
    v.crossing = label;
    c.visits.push_back(v);
  }
  return c;
}

// All label sequences of c crossings (each label twice, labels numbered by
// first encounter). Their number is the double factorial (2c-1)!!.
void enumerate_codes(int c, std::vector<int>& seq, std::vector<int>& open,
                     int used, std::vector<std::vector<int>>& out) {
  if (int(seq.size()) == 2 * c) {
    out.push_back(seq);
    return;
  }
  for (int label = 1; label <= used; ++label) {
    if (open[label] != 1) continue;
    open[label] = 2;
    seq.push_back(label);
    enumerate_codes(c, seq, open, used, out);
    seq.pop_back();
    open[label] = 1;
  }
  if (used < c) {
    open[used + 1] = 1;
    seq.push_back(used + 1);
    enumerate_codes(c, seq, open, used + 1, out);
    seq.pop_back();
    open[used + 1] = 0;
  }
}

std::vector<std::vector<int>> all_codes(int c) {
  std::vector<std::vector<int>> out;
  std::vector<int> seq;
  std::vector<int> open(c + 1, 0);
  enumerate_codes(c, seq, open, 0, out);
  return out;
}

}  // namespace

TEST_CASE("trefoil gauss code") {
  GaussCode c = gauss_code(from_pd(pd_trefoil()));
  CHECK(c.str() == "O1+,U2+,O3+,U1+,O2+,U3+");
  CHECK(label_sequence(c) == std::vector<int>{1, 2, 3, 1, 2, 3});
  CHECK(is_double_run(c));
  CHECK(!find_partition(c).has_value());
}

TEST_CASE("figure eight gauss code") {
  GaussCode c = gauss_code(from_pd(pd_figure_eight()));
  REQUIRE(c.visits.size() == 8);
  std::map<int, int> counts;
  int sign_sum = 0;
  for (const auto& v : c.visits) {
    ++counts[v.label];
    if (counts[v.label] == 1) sign_sum += v.sign;
  }
  REQUIRE(counts.size() == 4);
  for (const auto& [label, k] : counts) {
    CHECK(label >= 1);
    CHECK(label <= 4);
    CHECK(k == 2);
  }
  CHECK(sign_sum == 0);  // figure eight has writhe 0
}

TEST_CASE("crossing-free unknot has the empty code") {
  SpatialDiagram d;
  d.free_loops = {EdgeLabel{}};
  GaussCode c = gauss_code(d);
  CHECK(c.visits.empty());
  CHECK(c.str().empty());
  CHECK(is_double_run(c));
  CHECK(!find_partition(c).has_value());
}

TEST_CASE("gauss code rejects non-knots") {
  SpatialDiagram two = from_pd(pd_trefoil());
  two.free_loops.push_back(EdgeLabel{LabelFamily::Y, 1});
  CHECK_THROWS_WITH_AS(gauss_code(two),
                       "gauss code requires a single-component knot diagram",
                       Error);
  CHECK_THROWS_AS(gauss_code(planar_theta()), Error);
}

TEST_CASE("double-run detection") {
  CHECK(is_double_run(make_code({1, 2, 3, 1, 2, 3})));
  CHECK(is_double_run(make_code({1, 2, 1, 2})));
  CHECK(is_double_run(make_code({1, 1})));
  CHECK(!is_double_run(make_code({1, 2, 1, 3, 2, 3})));
  CHECK(!is_double_run(make_code({1, 1, 2, 2})));
}

TEST_CASE("partition of 1,2,1,3,2,3") {
  GaussCode c = make_code({1, 2, 1, 3, 2, 3});
  auto p = find_partition(c);
  REQUIRE(p.has_value());
  CHECK(*p == CodePartition{0, 3});  // arcs (1,2,1) and (3,2,3)
  auto [s1, s2] = partition_self_counts(c, *p);
  CHECK(s1 == 1);
  CHECK(s2 == 1);
}

TEST_CASE("self counts wrap around the cyclic sequence") {
  GaussCode c = make_code({1, 2, 1, 3, 2, 3});
  auto [s1, s2] = partition_self_counts(c, CodePartition{3, 5});
  CHECK(s1 == 0);  // arc (3,2) has no repeat
  CHECK(s2 == 1);  // arc (3,1,2,1) repeats label 1
}

TEST_CASE("partition exists exactly when the code is not a double run") {
  std::size_t total = 0;
  const std::size_t expected[] = {1, 1, 3, 15, 105, 945};  // (2c-1)!!
  for (int c = 1; c <= 5; ++c) {
    auto codes = all_codes(c);
    CHECK(codes.size() == expected[c]);
    total += codes.size();
    for (const auto& seq : codes) {
      GaussCode code = make_code(seq);
      auto p = find_partition(code);
      CHECK(p.has_value() == !is_double_run(code));
      if (p.has_value()) {
        CHECK(p->first < p->second);
        auto [s1, s2] = partition_self_counts(code, *p);
        CHECK(s1 >= 1);
        CHECK(s2 >= 1);
      }
    }
  }
  CHECK(total == 1069);
}
