#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "trinet/analysis.hpp"
#include "trinet/catalog.hpp"
#include "trinet/errors.hpp"

using namespace trinet;

namespace {

// Test-only oracle: enumerate every shortest path explicitly (DFS over the
// shortest-path DAG), take unions per pair, then scan all triples without any
// pruning. Feasible only for tiny graphs; independent of the library path.
struct DeltaOracle {
  std::vector<std::vector<int>> dist;
  const SimpleGraph* g;

  explicit DeltaOracle(const SimpleGraph& graph) : g(&graph) {
    for (int v = 0; v < graph.size(); ++v) dist.push_back(distances(graph, v));
  }

  void collect(int from, int to, int cur, std::set<int>& out) const {
    out.insert(cur);
    if (cur == from) return;
    for (int w : g->adj[static_cast<std::size_t>(cur)])
      if (dist[static_cast<std::size_t>(from)][static_cast<std::size_t>(w)] ==
          dist[static_cast<std::size_t>(from)][static_cast<std::size_t>(cur)] - 1)
        collect(from, to, w, out);
  }

  int delta() const {
    const int n = g->size();
    int best = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) {
          std::set<int> sbc, sac, sab;
          collect(b, c, c, sbc);
          collect(a, c, c, sac);
          collect(a, b, b, sab);
          int m = INT32_MAX;
          for (int x : sbc)
            for (int y : sac)
              for (int z : sab)
                m = std::min(m, dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] +
                                    dist[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)] +
                                    dist[static_cast<std::size_t>(z)][static_cast<std::size_t>(x)]);
          best = std::max(best, m);
        }
    return best;
  }
};

SimpleGraph path_graph(int n) {
  SimpleGraph g;
  g.adj.resize(static_cast<std::size_t>(n));
  for (int v = 0; v + 1 < n; ++v) {
    g.adj[static_cast<std::size_t>(v)].push_back(v + 1);
    g.adj[static_cast<std::size_t>(v) + 1].push_back(v);
  }
  return g;
}

SimpleGraph binary_tree(int depth) {
  SimpleGraph g;
  const int n = (1 << (depth + 1)) - 1;
  g.adj.resize(static_cast<std::size_t>(n));
  for (int v = 1; v < n; ++v) {
    g.adj[static_cast<std::size_t>(v)].push_back((v - 1) / 2);
    g.adj[static_cast<std::size_t>((v - 1) / 2)].push_back(v);
  }
  return g;
}

SimpleGraph grid_graph(int w, int h) {
  SimpleGraph g;
  g.adj.resize(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
  auto id = [w](int x, int y) { return y * w + x; };
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      if (x + 1 < w) {
        g.adj[static_cast<std::size_t>(id(x, y))].push_back(id(x + 1, y));
        g.adj[static_cast<std::size_t>(id(x + 1, y))].push_back(id(x, y));
      }
      if (y + 1 < h) {
        g.adj[static_cast<std::size_t>(id(x, y))].push_back(id(x, y + 1));
        g.adj[static_cast<std::size_t>(id(x, y + 1))].push_back(id(x, y));
      }
    }
  return g;
}

}  // namespace

TEST_CASE("shells and diameter of the seeds") {
  CHECK(shell_sizes(make_cube(), 0) == std::vector<int>{1, 3, 3, 1});
  CHECK(diameter(make_cube()) == 3);
  CHECK(shell_sizes(make_k33(), 0) == std::vector<int>{1, 3, 2});
  CHECK(diameter(make_k33()) == 2);
}

TEST_CASE("series and residuals") {
  Series exact{"affine", {}};
  for (int t = 0; t <= 20; ++t) exact.points.emplace_back(t, 3.5 * t - 2.0);
  for (const auto& [t, r] : linear_fit_deviation(exact).points) CHECK(std::abs(r) < 1e-9);

  const Series counts = vertex_count_series(cyclic_doubling_rule(), cube_state(), 64);
  REQUIRE(counts.points.size() == 65);
  for (const auto& [t, v] : counts.points) CHECK(v == 8 + 2 * static_cast<double>(t));
  const Series widx = writer_index_series(ladder_growth_rule(), cube_state(), 16);
  for (const auto& [t, v] : widx.points) CHECK(v == 0);  // in-place relocation keeps the slot
}

TEST_CASE("volume growth exponents of fixtures") {
  const SimpleGraph path = path_graph(600);
  const double d1 = shell_dimension(path, 300);
  CHECK(d1 == doctest::Approx(1.0).epsilon(0.3));
  const SimpleGraph grid = grid_graph(41, 41);
  const double d2 = shell_dimension(grid, 41 * 20 + 20);
  CHECK(d2 == doctest::Approx(2.0).epsilon(0.3));
  CHECK_THROWS_AS(shell_dimension(SimpleGraph::from(make_cube()), 0), TooSmall);
}

TEST_CASE("repetitive growth network looks one-dimensional") {
  SystemState state = cube_state();
  const Rule rule = ladder_growth_rule();
  for (int i = 0; i < 2000; ++i) step(state, rule);
  const double dim = shell_dimension(state.graph, state.writer);
  CHECK(dim == doctest::Approx(1.0).epsilon(0.3));
}

TEST_CASE("gromov delta matches the explicit-geodesic oracle on small graphs") {
  // trees
  CHECK(gromov_delta(path_graph(9)) == 0);
  CHECK(gromov_delta(binary_tree(3)) == 0);
  // small trinets, both variants sandwich the oracle value
  for (auto make : {make_cube, make_k33}) {
    const SimpleGraph g = SimpleGraph::from(make());
    const int oracle = DeltaOracle(g).delta();
    CHECK(gromov_delta(g, GeodesicVariant::FullSets) == oracle);
    CHECK(gromov_delta(g, GeodesicVariant::SinglePath) >= oracle);
  }
  // expanded cube (10 vertices) and a twelve-vertex state
  SystemState state = cube_state();
  const Rule rule = cyclic_doubling_rule();
  step(state, rule);
  {
    const SimpleGraph g = SimpleGraph::from(state.graph);
    CHECK(gromov_delta(g) == DeltaOracle(g).delta());
  }
  step(state, rule);
  {
    const SimpleGraph g = SimpleGraph::from(state.graph);
    CHECK(gromov_delta(g) == DeltaOracle(g).delta());
  }
}

TEST_CASE("delta is invariant under color-preserving relabeling") {
  // Rebuild the cube with a permuted vertex order; metric quantities agree.
  ColoredTrinet g = ColoredTrinet::with_vertices(8);
  const std::array<VertexId, 8> perm{5, 2, 7, 0, 3, 6, 1, 4};
  const ColoredTrinet cube = make_cube();
  for (VertexId v = 0; v < 8; ++v)
    for (Color c : kColors)
      g.link(perm[static_cast<std::size_t>(v)],
             perm[static_cast<std::size_t>(cube.neighbor(v, c))], c);
  CHECK(gromov_delta(g) == gromov_delta(cube));
  CHECK(diameter(g) == diameter(cube));
}

TEST_CASE("scaled hyperbolicity report on the cube") {
  const HyperbolicityReport rep = scaled_hyperbolic(make_cube());
  CHECK(rep.diameter == 3);
  CHECK(rep.ratio.second == 3);
  CHECK(rep.delta == gromov_delta(make_cube()));
  CHECK(rep.scaled_hyperbolic == (2 * rep.delta < 3 * rep.diameter));
}

TEST_CASE("writer trail arrows") {
  const auto trail = writer_trail(cyclic_doubling_rule(), cube_state(), 200, 50);
  CHECK(trail.size() == 50);
  CHECK(trail.back().time == 199);
  // Arrows of the doubling rule never backtrack.
  for (std::size_t i = 1; i < trail.size(); ++i) {
    CHECK(trail[i].from == trail[i - 1].to);
    CHECK(trail[i].to != trail[i - 1].from);
  }
  // A halted run yields motionless arrows.
  const auto still = writer_trail(halting_example_rule(), cube_state(), 10, 3);
  for (const auto& arrow : still) CHECK(arrow.from == arrow.to);
}
