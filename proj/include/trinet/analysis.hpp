#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "trinet/graph.hpp"
#include "trinet/rule.hpp"
#include "trinet/system.hpp"

namespace trinet {

struct Series {
  std::string name;
  std::vector<std::pair<std::int64_t, double>> points;  // t strictly increasing
};

Series vertex_count_series(const Rule& rule, const SystemState& init, std::int64_t t_max);
Series writer_index_series(const Rule& rule, const SystemState& init, std::int64_t t_max);

// Residuals about the least-squares line over the whole series.
Series linear_fit_deviation(const Series& s);

// Plain adjacency-list view; metric code works on this so test fixtures
// (trees, grids) can share it. Neighbor order from a trinet is red < blue <
// green.
struct SimpleGraph {
  std::vector<std::vector<int>> adj;
  int size() const { return static_cast<int>(adj.size()); }
  static SimpleGraph from(const ColoredTrinet& g);
};

std::vector<int> distances(const SimpleGraph& g, int root);
std::vector<int> shell_sizes(const SimpleGraph& g, int root);
int diameter(const SimpleGraph& g);
inline std::vector<int> shell_sizes(const ColoredTrinet& g, VertexId root) {
  return shell_sizes(SimpleGraph::from(g), root);
}
inline int diameter(const ColoredTrinet& g) { return diameter(SimpleGraph::from(g)); }

// Volume-growth exponent at the root: least-squares slope of log |ball(k)|
// against log k over k in [2, floor(diameter/2)]. Throws TooSmall when the
// graph is too shallow to fit (needs at least two sample radii).
double shell_dimension(const SimpleGraph& g, int root);
inline double shell_dimension(const ColoredTrinet& g, VertexId root) {
  return shell_dimension(SimpleGraph::from(g), root);
}

enum class GeodesicVariant { FullSets, SinglePath };

// The three-point thinness quantity: max over vertex triples (a,b,c) of the
// minimal d(x,y)+d(y,z)+d(z,x) with x,y,z drawn from the geodesics of the
// opposite sides. FullSets ranges over every vertex on some geodesic;
// SinglePath restricts to one deterministically extracted shortest path per
// pair. Throws TooLarge above max_vertices.
int gromov_delta(const SimpleGraph& g, GeodesicVariant variant = GeodesicVariant::FullSets,
                 int max_vertices = 2000, int threads = 1);
inline int gromov_delta(const ColoredTrinet& g,
                        GeodesicVariant variant = GeodesicVariant::FullSets,
                        int max_vertices = 2000, int threads = 1) {
  return gromov_delta(SimpleGraph::from(g), variant, max_vertices, threads);
}

struct HyperbolicityReport {
  int delta = 0;              // full geodesic sets
  int delta_single_path = 0;  // deterministic single-path variant
  int diameter = 0;
  std::pair<int, int> ratio;       // delta / diameter, exact
  bool scaled_hyperbolic = false;  // ratio < 3/2
};

HyperbolicityReport scaled_hyperbolic(const SimpleGraph& g, int max_vertices = 2000,
                                      int threads = 1);
inline HyperbolicityReport scaled_hyperbolic(const ColoredTrinet& g, int max_vertices = 2000,
                                             int threads = 1) {
  return scaled_hyperbolic(SimpleGraph::from(g), max_vertices, threads);
}

struct TrailArrow {
  std::int64_t time;  // arrow covers the update time -> time+1
  VertexId from, to;
};

// The last k writer transitions of a t_max-step run.
std::vector<TrailArrow> writer_trail(const Rule& rule, const SystemState& init, std::int64_t t_max,
                                     std::int64_t k);

}  // namespace trinet
