#include <doctest.h>

#include <set>

#include "trinet/graph.hpp"
#include "trinet/iso.hpp"

using namespace trinet;

TEST_CASE("rooted iso identity and transitivity probes") {
  const ColoredTrinet cube = make_cube();
  CHECK(rooted_iso(cube, 3, cube, 3));
  // The axis-colored cube is vertex-transitive under color-preserving maps.
  for (VertexId v = 0; v < 8; ++v) CHECK(rooted_iso(cube, 0, cube, v));
  CHECK(!rooted_iso(cube, 0, make_k33(), 0));
}

TEST_CASE("canonical forms agree exactly with rooted iso") {
  const ColoredTrinet cube = make_cube();
  std::set<std::string> forms;
  for (VertexId v = 0; v < 8; ++v) forms.insert(canonical_form(cube, v));
  CHECK(forms.size() == 1);
  CHECK(canonical_form(cube, 0) != canonical_form(make_k33(), 0));
  // Encoding length grows with vertex count.
  ColoredTrinet bigger = make_cube();
  bigger.expand(0);
  CHECK(canonical_form(bigger, 1).size() > canonical_form(cube, 1).size());
}

TEST_CASE("unrooted iso finds some root") {
  ColoredTrinet a = make_cube();
  ColoredTrinet b = make_cube();
  a.expand(2);
  b.expand(6);
  CHECK(unrooted_iso(a, b));  // cube symmetry moves any corner to any other
  CHECK(!unrooted_iso(a, make_cube()));
  CHECK(unrooted_iso(make_k33(), make_k33()));
}

TEST_CASE("ball iso tracks local structure only") {
  ColoredTrinet a = make_cube();
  ColoredTrinet b = make_cube();
  b.expand(7);  // far from vertex 0's radius-1 ball
  CHECK(rooted_ball_iso(a, 0, b, 0, 1));
  CHECK(!rooted_ball_iso(a, 0, b, 0, 3));  // radius 3 reaches the triangle
  CHECK(!rooted_ball_iso(a, 0, b, 7, 1));  // triangle corner looks different
}
