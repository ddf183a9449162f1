#include "trinet/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <thread>

#include "trinet/errors.hpp"

namespace trinet {

Series vertex_count_series(const Rule& rule, const SystemState& init, std::int64_t t_max) {
  Series s{"vertices", {}};
  s.points.reserve(static_cast<std::size_t>(t_max) + 1);
  SystemState state = init;
  s.points.emplace_back(state.time, static_cast<double>(state.graph.vertex_count()));
  for (std::int64_t i = 0; i < t_max; ++i) {
    step(state, rule);
    s.points.emplace_back(state.time, static_cast<double>(state.graph.vertex_count()));
  }
  return s;
}

Series writer_index_series(const Rule& rule, const SystemState& init, std::int64_t t_max) {
  Series s{"writer_index", {}};
  s.points.reserve(static_cast<std::size_t>(t_max) + 1);
  SystemState state = init;
  s.points.emplace_back(state.time, static_cast<double>(state.writer));
  for (std::int64_t i = 0; i < t_max; ++i) {
    step(state, rule);
    s.points.emplace_back(state.time, static_cast<double>(state.writer));
  }
  return s;
}

Series linear_fit_deviation(const Series& s) {
  const std::size_t n = s.points.size();
  if (n < 2) throw TooSmall("linear fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [t, v] : s.points) {
    const double x = static_cast<double>(t);
    sx += x;
    sy += v;
    sxx += x * x;
    sxy += x * v;
  }
  const double num = static_cast<double>(n);
  const double denom = num * sxx - sx * sx;
  const double slope = denom == 0 ? 0 : (num * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / num;
  Series out{s.name + "_residual", {}};
  out.points.reserve(n);
  for (const auto& [t, v] : s.points)
    out.points.emplace_back(t, v - (slope * static_cast<double>(t) + intercept));
  return out;
}

SimpleGraph SimpleGraph::from(const ColoredTrinet& g) {
  SimpleGraph out;
  out.adj.resize(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (Color c : kColors) out.adj[static_cast<std::size_t>(v)].push_back(g.neighbor(v, c));
  return out;
}

std::vector<int> distances(const SimpleGraph& g, int root) {
  std::vector<int> dist(static_cast<std::size_t>(g.size()), -1);
  std::deque<int> queue;
  dist[static_cast<std::size_t>(root)] = 0;
  queue.push_back(root);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : g.adj[static_cast<std::size_t>(u)])
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

std::vector<int> shell_sizes(const SimpleGraph& g, int root) {
  const auto dist = distances(g, root);
  int ecc = 0;
  for (int d : dist) ecc = std::max(ecc, d);
  std::vector<int> shells(static_cast<std::size_t>(ecc) + 1, 0);
  for (int d : dist)
    if (d >= 0) ++shells[static_cast<std::size_t>(d)];
  return shells;
}

int diameter(const SimpleGraph& g) {
  int dia = 0;
  for (int v = 0; v < g.size(); ++v) {
    const auto dist = distances(g, v);
    for (int d : dist) dia = std::max(dia, d);
  }
  return dia;
}

double shell_dimension(const SimpleGraph& g, int root) {
  const int dia = diameter(g);
  if (dia < 4) throw TooSmall("shell dimension needs diameter >= 4");
  const auto shells = shell_sizes(g, root);
  const int k_max = dia / 2;
  std::vector<std::pair<double, double>> pts;  // (log k, log |ball(k)|)
  std::int64_t ball = 0;
  for (int k = 0; k <= k_max && k < static_cast<int>(shells.size()); ++k) {
    ball += shells[static_cast<std::size_t>(k)];
    if (k >= 2) pts.emplace_back(std::log(static_cast<double>(k)), std::log(static_cast<double>(ball)));
  }
  if (pts.size() < 2) throw TooSmall("shell dimension fit range has fewer than two radii");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(pts.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

// One deterministic shortest path between u and v: walk back from the larger
// id endpoint picking the smallest-id predecessor.
std::vector<int> canonical_path(const std::vector<std::vector<int>>& adj,
                                const std::vector<int>& dist_from_u, int u, int v) {
  std::vector<int> path{v};
  int cur = v;
  while (cur != u) {
    int best = -1;
    for (int w : adj[static_cast<std::size_t>(cur)])
      if (dist_from_u[static_cast<std::size_t>(w)] == dist_from_u[static_cast<std::size_t>(cur)] - 1)
        best = best < 0 ? w : std::min(best, w);
    cur = best;
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

struct DeltaContext {
  int n = 0;
  std::vector<std::vector<int>> dist;  // full matrix
  const SimpleGraph* g = nullptr;

  int d(int a, int b) const { return dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  bool on_geodesic(int a, int b, int x) const { return d(a, x) + d(x, b) == d(a, b); }
};

// Exact minimum of d(x,y)+d(y,z)+d(z,x) over the three candidate sets with an
// early abort once the bound cannot matter anymore.
int triple_min(const DeltaContext& ctx, const std::vector<int>& sbc, const std::vector<int>& sac,
               const std::vector<int>& sab, int abort_at) {
  int best = INT32_MAX;
  for (int x : sbc) {
    for (int y : sac) {
      const int dxy = ctx.d(x, y);
      if (dxy >= best) continue;
      for (int z : sab) {
        const int sum = dxy + ctx.d(y, z) + ctx.d(z, x);
        if (sum < best) {
          best = sum;
          if (best <= abort_at) return best;
        }
      }
    }
  }
  return best;
}

}  // namespace

int gromov_delta(const SimpleGraph& g, GeodesicVariant variant, int max_vertices, int threads) {
  const int n = g.size();
  if (n > max_vertices)
    throw TooLarge("graph has " + std::to_string(n) + " vertices, above the bound of " +
                   std::to_string(max_vertices));
  if (n < 3) return 0;

  DeltaContext ctx;
  ctx.n = n;
  ctx.g = &g;
  ctx.dist.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) ctx.dist.push_back(distances(g, v));

  auto side_set = [&](int a, int b) {
    std::vector<int> out;
    if (variant == GeodesicVariant::SinglePath) {
      const int u = std::min(a, b), v = std::max(a, b);
      return canonical_path(g.adj, ctx.dist[static_cast<std::size_t>(u)], u, v);
    }
    for (int x = 0; x < n; ++x)
      if (ctx.on_geodesic(a, b, x)) out.push_back(x);
    return out;
  };

  if (threads <= 0) threads = 1;
  std::atomic<int> global_best{0};
  std::atomic<int> next_a{0};
  auto worker = [&]() {
    for (;;) {
      const int a = next_a.fetch_add(1);
      if (a >= n) return;
      for (int b = a + 1; b < n; ++b) {
        for (int c = b + 1; c < n; ++c) {
          const int dab = ctx.d(a, b), dac = ctx.d(a, c), dbc = ctx.d(b, c);
          const int cur = global_best.load(std::memory_order_relaxed);
          // Corner seeds put an upper bound of twice the smallest side on the
          // triple's minimum; triples that cannot beat the running max skip.
          if (2 * std::min({dab, dac, dbc}) <= cur) continue;
          const auto sbc = side_set(b, c);
          const auto sac = side_set(a, c);
          const auto sab = side_set(a, b);
          const int m = triple_min(ctx, sbc, sac, sab, cur);
          int seen = global_best.load(std::memory_order_relaxed);
          while (m > seen && !global_best.compare_exchange_weak(seen, m)) {
          }
        }
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return global_best.load();
}

HyperbolicityReport scaled_hyperbolic(const SimpleGraph& g, int max_vertices, int threads) {
  HyperbolicityReport rep;
  rep.delta = gromov_delta(g, GeodesicVariant::FullSets, max_vertices, threads);
  rep.delta_single_path = gromov_delta(g, GeodesicVariant::SinglePath, max_vertices, threads);
  rep.diameter = diameter(g);
  rep.ratio = {rep.delta, rep.diameter};
  rep.scaled_hyperbolic = rep.diameter > 0 && 2 * rep.delta < 3 * rep.diameter;
  return rep;
}

std::vector<TrailArrow> writer_trail(const Rule& rule, const SystemState& init, std::int64_t t_max,
                                     std::int64_t k) {
  std::vector<TrailArrow> all;
  all.reserve(static_cast<std::size_t>(t_max));
  SystemState state = init;
  for (std::int64_t i = 0; i < t_max; ++i) {
    const VertexId from = state.writer;
    const std::int64_t at = state.time;
    step(state, rule);
    all.push_back(TrailArrow{at, from, state.writer});
  }
  if (k < static_cast<std::int64_t>(all.size()))
    all.erase(all.begin(), all.end() - static_cast<std::ptrdiff_t>(k));
  return all;
}

}  // namespace trinet
