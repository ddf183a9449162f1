#include "trinet/graph.hpp"

#include <algorithm>

#include "trinet/errors.hpp"

namespace trinet {

std::optional<Surroundings> ColoredTrinet::surroundings(VertexId v) const {
  const VertexId nr = neighbor(v, Color::Red);
  const VertexId nb = neighbor(v, Color::Blue);
  const VertexId ng = neighbor(v, Color::Green);

  int linked_pairs = 0;
  int links_in_pair = 0;
  Color pair_color = Color::Red;
  auto probe = [&](VertexId a, VertexId b) {
    if (a == b) return;  // a digon at v; the degenerate pair carries no edge
    int n = link_count(a, b);
    if (n > 0) {
      ++linked_pairs;
      links_in_pair = n;
      pair_color = *linking_color(a, b);
    }
  };
  probe(nr, nb);
  probe(nr, ng);
  probe(nb, ng);

  if (linked_pairs == 0) return Surroundings::None;
  if (linked_pairs > 1 || links_in_pair > 1) return std::nullopt;
  return surroundings_of(pair_color);
}

ColoredTrinet::Expansion ColoredTrinet::expand(VertexId p) {
  const VertexId ur = neighbor(p, Color::Red);
  const VertexId ub = neighbor(p, Color::Blue);
  const VertexId ug = neighbor(p, Color::Green);

  const VertexId tr = p;  // red-external vertex inherits the index
  const VertexId tg = vertex_count();
  const VertexId tb = vertex_count() + 1;
  links_.push_back({kNoVertex, kNoVertex, kNoVertex});
  links_.push_back({kNoVertex, kNoVertex, kNoVertex});

  // External edges. When p had a parallel edge to one of its neighbors the
  // order here matters only for self-referential links, which "p's neighbor
  // is p itself" would need; that is excluded by the no-self-loop invariant.
  link(tr, ur, Color::Red);
  link(tg, ug, Color::Green);
  link(tb, ub, Color::Blue);
  // Internal edges.
  link(tg, tr, Color::Blue);
  link(tb, tr, Color::Green);
  link(tb, tg, Color::Red);

  return Expansion{tr, tg, tb};
}

ColoredTrinet::Shrink ColoredTrinet::shrink(VertexId p) {
  // Locate the triangle through p: the first pair of p's neighbors (in color
  // order) that are themselves adjacent.
  VertexId u = kNoVertex, w = kNoVertex;
  Color cu = Color::Red, cw = Color::Red;
  const std::array<std::pair<Color, Color>, 3> pairs{{{Color::Red, Color::Blue},
                                                      {Color::Red, Color::Green},
                                                      {Color::Blue, Color::Green}}};
  for (auto [c1, c2] : pairs) {
    VertexId a = neighbor(p, c1);
    VertexId b = neighbor(p, c2);
    if (a != b && adjacent(a, b)) {
      u = a;
      w = b;
      cu = c1;
      cw = c2;
      break;
    }
  }
  if (u == kNoVertex) throw NotATriangle("vertex " + std::to_string(p) + " is not on a 3-cycle");

  // External edge of each triangle vertex: the color it does not spend inside
  // the triangle. Proper coloring makes the three internal colors distinct.
  const Color internal_uw = *linking_color(u, w);
  const Color ext_p = internal_uw;  // the color p does not use on u or w
  const Color ext_u = cw;
  const Color ext_w = cu;
  const VertexId xp = neighbor(p, ext_p);
  const VertexId xu = neighbor(u, ext_u);
  const VertexId xw = neighbor(w, ext_w);
  if (xp == xu || xp == xw || xu == xw)
    throw DegenerateExternal("triangle externals do not reach three distinct vertices");

  const VertexId keep = std::min({p, u, w});
  VertexId drop1 = std::max({p, u, w});
  VertexId drop2 = p + u + w - keep - drop1;
  if (drop1 < drop2) std::swap(drop1, drop2);  // drop2 < drop1

  // Merged vertex takes over the three external edges with original colors.
  link(keep, xp, ext_p);
  link(keep, xu, ext_u);
  link(keep, xw, ext_w);

  // Dense reindex: ids above each freed slot shift down.
  std::vector<VertexId> remap(links_.size(), kNoVertex);
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (v == drop1 || v == drop2) continue;
    remap[static_cast<std::size_t>(v)] = v - (v > drop2) - (v > drop1);
  }
  std::vector<Links> fresh(links_.size() - 2);
  for (VertexId v = 0; v < vertex_count(); ++v) {
    VertexId nv = remap[static_cast<std::size_t>(v)];
    if (nv == kNoVertex) continue;
    Links ln = links_[static_cast<std::size_t>(v)];
    for (auto& t : ln) t = remap[static_cast<std::size_t>(t)];
    fresh[static_cast<std::size_t>(nv)] = ln;
  }
  links_ = std::move(fresh);
  return Shrink{remap[static_cast<std::size_t>(keep)], std::move(remap)};
}

void ColoredTrinet::exchange(VertexId a, VertexId x, Color c) {
  const VertexId b = neighbor(a, c);
  const VertexId y = neighbor(x, c);
  if ((a == x && b == y) || (a == y && b == x))
    throw SameEdge("the two selected edges coincide");
  if (a == x || b == y) throw WouldSelfLoop("rewiring would create a self-loop");
  link(a, x, c);
  link(b, y, c);
}

std::optional<std::string> ColoredTrinet::invariant_violation() const {
  for (VertexId v = 0; v < vertex_count(); ++v) {
    for (Color c : kColors) {
      VertexId n = neighbor(v, c);
      if (!is_vertex(n))
        return "vertex " + std::to_string(v) + " has no " + color_name(c) + " neighbor";
      if (n == v) return "self-loop at vertex " + std::to_string(v);
      if (neighbor(n, c) != v)
        return "involution broken on " + std::string(color_name(c)) + " edge at vertex " +
               std::to_string(v);
    }
  }
  return std::nullopt;
}

bool ColoredTrinet::locally_sound(VertexId v) const {
  for (Color c : kColors) {
    VertexId n = neighbor(v, c);
    if (!is_vertex(n) || n == v || neighbor(n, c) != v) return false;
    for (Color c2 : kColors) {
      VertexId m = neighbor(n, c2);
      if (!is_vertex(m) || m == n || neighbor(m, c2) != n) return false;
    }
  }
  return true;
}

ColoredTrinet make_cube() {
  // Vertices are coordinate bit-triples x + 2y + 4z; edges colored by axis.
  ColoredTrinet g = ColoredTrinet::with_vertices(8);
  for (VertexId v = 0; v < 8; ++v) {
    g.link(v, v ^ 1, Color::Red);
    g.link(v, v ^ 2, Color::Blue);
    g.link(v, v ^ 4, Color::Green);
  }
  return g;
}

ColoredTrinet make_k33() {
  // Clusters {0,1,2} and {3,4,5}; edge (i, 3+j) takes color (i+j) mod 3.
  ColoredTrinet g = ColoredTrinet::with_vertices(6);
  for (VertexId i = 0; i < 3; ++i)
    for (VertexId j = 0; j < 3; ++j)
      g.link(i, 3 + j, static_cast<Color>((i + j) % 3));
  return g;
}

}  // namespace trinet
