#pragma once

#include <string>
#include <vector>

#include "trinet/graph.hpp"

namespace trinet {

// Color-preserving isomorphism sending root1 to root2. In a properly
// edge-3-colored cubic graph the map is forced outward from the root pair, so
// this is a single linear-time traversal. Graphs are assumed connected.
bool rooted_iso(const ColoredTrinet& g1, VertexId root1, const ColoredTrinet& g2, VertexId root2);

// Tries every root in g2 against a fixed root in g1.
bool unrooted_iso(const ColoredTrinet& g1, const ColoredTrinet& g2);

// Breadth-first encoding by color order from the root. Two rooted graphs have
// equal encodings exactly when rooted_iso holds; hashing the encoding of
// (graph, writer) gives full-state cycle detection.
std::string canonical_form(const ColoredTrinet& g, VertexId root);

// BFS distances from root, truncated at `radius` (-1 marks "outside"); pass a
// negative radius for the full graph.
std::vector<int> bfs_distances(const ColoredTrinet& g, VertexId root, int radius = -1);

// Color-preserving isomorphism of the induced balls of the given radius,
// sending root1 to root2.
bool rooted_ball_iso(const ColoredTrinet& g1, VertexId root1, const ColoredTrinet& g2,
                     VertexId root2, int radius);

}  // namespace trinet
