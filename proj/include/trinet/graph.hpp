#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trinet/color.hpp"

namespace trinet {

using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;

/// An edge-3-colored cubic graph, stored as one neighbor per color per vertex.
///
/// Invariants maintained by the rewrite operations:
///   * per-color involution: neighbor(neighbor(v, c), c) == v
///   * no self-loops: neighbor(v, c) != v
/// 3-regularity and proper coloring hold by representation. Parallel edges of
/// different colors are legal (every triangle has them pairwise one apart);
/// same-color parallels are impossible by representation.
class ColoredTrinet {
 public:
  ColoredTrinet() = default;

  static ColoredTrinet with_vertices(int n) {
    ColoredTrinet g;
    g.links_.resize(static_cast<std::size_t>(n), {kNoVertex, kNoVertex, kNoVertex});
    return g;
  }

  int vertex_count() const { return static_cast<int>(links_.size()); }

  bool is_vertex(VertexId v) const { return v >= 0 && v < vertex_count(); }

  VertexId neighbor(VertexId v, Color c) const {
    return links_[static_cast<std::size_t>(v)][static_cast<std::size_t>(color_index(c))];
  }

  // Sets the c-colored edge {u, v} in both directions. Building block for
  // constructors and parsers; rewrite ops below keep invariants themselves.
  void link(VertexId u, VertexId v, Color c) {
    links_[static_cast<std::size_t>(u)][static_cast<std::size_t>(color_index(c))] = v;
    links_[static_cast<std::size_t>(v)][static_cast<std::size_t>(color_index(c))] = u;
  }

  bool adjacent(VertexId u, VertexId v) const {
    const auto& lu = links_[static_cast<std::size_t>(u)];
    return lu[0] == v || lu[1] == v || lu[2] == v;
  }

  // Number of parallel edges between u and v (0..3).
  int link_count(VertexId u, VertexId v) const {
    const auto& lu = links_[static_cast<std::size_t>(u)];
    return (lu[0] == v) + (lu[1] == v) + (lu[2] == v);
  }

  // Smallest color linking u and v, if any.
  std::optional<Color> linking_color(VertexId u, VertexId v) const {
    for (Color c : kColors)
      if (neighbor(u, c) == v) return c;
    return std::nullopt;
  }

  // v[w]: follow the edges named by `word` starting at v. Total on live
  // vertices; the empty word returns v.
  VertexId walk(VertexId v, std::span<const Color> word) const {
    for (Color c : word) v = neighbor(v, c);
    return v;
  }
  VertexId walk(VertexId v, const MoveWord& word) const {
    return walk(v, std::span<const Color>(word.data(), word.size()));
  }

  // Surroundings type of v. nullopt means two or more interlinked pairs (or
  // one pair interlinked by parallel edges), which the canonical rule space
  // never produces; callers treat it as an anomaly.
  std::optional<Surroundings> surroundings(VertexId v) const;

  struct Expansion {
    VertexId red_vertex;    // carries the red external edge; inherits p's index
    VertexId green_vertex;  // green external edge; index L+1
    VertexId blue_vertex;   // blue external edge; index L+2
  };

  // Replaces p with a triangle. External edges keep p's former neighbors and
  // colors; internal edges are blue {green_v, red_v}, green {blue_v, red_v},
  // red {blue_v, green_v}. Vertex count +2.
  Expansion expand(VertexId p);

  struct Shrink {
    VertexId merged;              // inherits the smallest removed index
    std::vector<VertexId> remap;  // old id -> new id (kNoVertex for removed)
  };

  // Inverse of expand: collapses the triangle through p into one vertex.
  // Throws NotATriangle / DegenerateExternal. Indices above the two freed
  // slots shift down densely.
  Shrink shrink(VertexId p);

  // Rewires the c-colored edges {a, a[c]} and {x, x[c]} into {a, x} and
  // {a[c], x[c]}. Throws SameEdge / WouldSelfLoop.
  void exchange(VertexId a, VertexId x, Color c);

  // Full structural audit; returns a description of the first violation or
  // nullopt when all invariants hold.
  std::optional<std::string> invariant_violation() const;

  // Cheap audit of the vertices touched by one rewrite (involution and
  // self-loop checks restricted to v and its neighbors).
  bool locally_sound(VertexId v) const;

  bool operator==(const ColoredTrinet&) const = default;

 private:
  using Links = std::array<VertexId, 3>;
  std::vector<Links> links_;
};

ColoredTrinet make_cube();
ColoredTrinet make_k33();

}  // namespace trinet
