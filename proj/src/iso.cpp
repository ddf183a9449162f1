#include "trinet/iso.hpp"

#include <cstring>
#include <deque>

namespace trinet {

bool rooted_iso(const ColoredTrinet& g1, VertexId root1, const ColoredTrinet& g2, VertexId root2) {
  const int n = g1.vertex_count();
  if (n != g2.vertex_count()) return false;
  std::vector<VertexId> fwd(static_cast<std::size_t>(n), kNoVertex);
  std::vector<VertexId> rev(static_cast<std::size_t>(n), kNoVertex);
  std::deque<VertexId> queue;
  fwd[static_cast<std::size_t>(root1)] = root2;
  rev[static_cast<std::size_t>(root2)] = root1;
  queue.push_back(root1);
  int matched = 1;
  while (!queue.empty()) {
    VertexId u1 = queue.front();
    queue.pop_front();
    VertexId u2 = fwd[static_cast<std::size_t>(u1)];
    for (Color c : kColors) {
      VertexId n1 = g1.neighbor(u1, c);
      VertexId n2 = g2.neighbor(u2, c);
      VertexId& m = fwd[static_cast<std::size_t>(n1)];
      if (m == kNoVertex) {
        if (rev[static_cast<std::size_t>(n2)] != kNoVertex) return false;
        m = n2;
        rev[static_cast<std::size_t>(n2)] = n1;
        queue.push_back(n1);
        ++matched;
      } else if (m != n2) {
        return false;
      }
    }
  }
  return matched == n;  // also guards against disconnected inputs
}

bool unrooted_iso(const ColoredTrinet& g1, const ColoredTrinet& g2) {
  if (g1.vertex_count() != g2.vertex_count()) return false;
  if (g1.vertex_count() == 0) return true;
  for (VertexId r2 = 0; r2 < g2.vertex_count(); ++r2)
    if (rooted_iso(g1, 0, g2, r2)) return true;
  return false;
}

std::string canonical_form(const ColoredTrinet& g, VertexId root) {
  const int n = g.vertex_count();
  std::vector<VertexId> order(static_cast<std::size_t>(n), kNoVertex);
  std::vector<VertexId> by_order;
  by_order.reserve(static_cast<std::size_t>(n));
  order[static_cast<std::size_t>(root)] = 0;
  by_order.push_back(root);
  for (std::size_t head = 0; head < by_order.size(); ++head) {
    VertexId u = by_order[head];
    for (Color c : kColors) {
      VertexId v = g.neighbor(u, c);
      if (order[static_cast<std::size_t>(v)] == kNoVertex) {
        order[static_cast<std::size_t>(v)] = static_cast<VertexId>(by_order.size());
        by_order.push_back(v);
      }
    }
  }
  std::string out;
  out.resize(4 + by_order.size() * 12);
  auto put32 = [&out](std::size_t at, std::uint32_t x) {
    out[at] = static_cast<char>(x & 0xff);
    out[at + 1] = static_cast<char>((x >> 8) & 0xff);
    out[at + 2] = static_cast<char>((x >> 16) & 0xff);
    out[at + 3] = static_cast<char>((x >> 24) & 0xff);
  };
  put32(0, static_cast<std::uint32_t>(by_order.size()));
  std::size_t at = 4;
  for (VertexId u : by_order)
    for (Color c : kColors) {
      put32(at, static_cast<std::uint32_t>(order[static_cast<std::size_t>(g.neighbor(u, c))]));
      at += 4;
    }
  return out;
}

std::vector<int> bfs_distances(const ColoredTrinet& g, VertexId root, int radius) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::deque<VertexId> queue;
  dist[static_cast<std::size_t>(root)] = 0;
  queue.push_back(root);
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    int d = dist[static_cast<std::size_t>(u)];
    if (radius >= 0 && d >= radius) continue;
    for (Color c : kColors) {
      VertexId v = g.neighbor(u, c);
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = d + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool rooted_ball_iso(const ColoredTrinet& g1, VertexId root1, const ColoredTrinet& g2,
                     VertexId root2, int radius) {
  const auto dist1 = bfs_distances(g1, root1, radius);
  const auto dist2 = bfs_distances(g2, root2, radius);

  std::vector<VertexId> fwd(dist1.size(), kNoVertex);
  std::vector<VertexId> rev(dist2.size(), kNoVertex);
  std::deque<VertexId> queue;
  fwd[static_cast<std::size_t>(root1)] = root2;
  rev[static_cast<std::size_t>(root2)] = root1;
  queue.push_back(root1);
  std::size_t matched = 1;
  while (!queue.empty()) {
    VertexId u1 = queue.front();
    queue.pop_front();
    VertexId u2 = fwd[static_cast<std::size_t>(u1)];
    for (Color c : kColors) {
      VertexId n1 = g1.neighbor(u1, c);
      VertexId n2 = g2.neighbor(u2, c);
      const bool in1 = dist1[static_cast<std::size_t>(n1)] >= 0;
      const bool in2 = dist2[static_cast<std::size_t>(n2)] >= 0;
      if (in1 != in2) return false;  // an edge leaves one ball but not the other
      if (!in1) continue;
      VertexId& m = fwd[static_cast<std::size_t>(n1)];
      if (m == kNoVertex) {
        if (rev[static_cast<std::size_t>(n2)] != kNoVertex) return false;
        m = n2;
        rev[static_cast<std::size_t>(n2)] = n1;
        queue.push_back(n1);
        ++matched;
      } else if (m != n2) {
        return false;
      }
    }
  }
  std::size_t ball1 = 0, ball2 = 0;
  for (int d : dist1) ball1 += d >= 0;
  for (int d : dist2) ball2 += d >= 0;
  return matched == ball1 && ball1 == ball2;
}

}  // namespace trinet
