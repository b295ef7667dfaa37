#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "knotwork/constructors.hpp"
#include "knotwork/invariants.hpp"
#include "knotwork/svg.hpp"

using namespace knotwork;
using namespace kwtest;

namespace {

const SpatialDiagram& table(const std::string& name) {
  return KnotTable::instance().at(name).diagram;
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size())) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("svg documents are well formed and complete") {
  for (const SpatialDiagram& d :
       {table("3_1"), table("5_2"), planar_theta(),
        build_theta(table("3_1"), table("4_1")),
        build_theta_n(2, table("3_1"), table("4_1"))}) {
    const std::string svg = to_svg(d);
    CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"",
                    0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("nan") == std::string::npos);
    CHECK(svg.find("inf") == std::string::npos);
    // one path per arc plus halo + restrike per crossing
    CHECK(count(svg, "<path") ==
          static_cast<int>(d.arcs.size() + 2 * d.crossings.size()));
    CHECK(count(svg, "<circle") == static_cast<int>(d.nodes.size()));
    CHECK(to_svg(d) == svg);  // deterministic
  }
}

TEST_CASE("labels and free loops appear in the picture") {
  const std::string theta = to_svg(planar_theta());
  CHECK(theta.find(">x1</text>") != std::string::npos);
  CHECK(theta.find(">y1</text>") != std::string::npos);
  CHECK(theta.find(">z1</text>") != std::string::npos);

  SpatialDiagram loop;
  loop.family = {FamilyKind::Knot, 0, 0, 0};
  loop.free_loops = {EdgeLabel{LabelFamily::X, 1}};
  const std::string svg = to_svg(loop);
  CHECK(count(svg, "<circle") == 1);
  CHECK(svg.find(">x1</text>") != std::string::npos);
  CHECK(count(svg, "<path") == 0);
}

TEST_CASE("drawings are written to disk verbatim") {
  const std::string path = "test_out_trefoil.svg";
  save_svg(table("3_1"), path);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == to_svg(table("3_1")));
  in.close();
  std::remove(path.c_str());
}
