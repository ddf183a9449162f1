#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "trinet/analysis.hpp"
#include "trinet/graph.hpp"

namespace trinet {

// The trinet v1 text format:
//   trinet v1
//   vertices N
//   edge <u> <v> <r|b|g>     (one line per edge)
//   writer <w>               (optional)
// Every vertex must occur in exactly one edge per color; the parser rejects
// violations with line numbers.

struct LoadedTrinet {
  ColoredTrinet graph;
  std::optional<VertexId> writer;
};

LoadedTrinet read_trinet(std::istream& in);            // throws ParseError
LoadedTrinet read_trinet_file(const std::string& path);  // throws IoError/ParseError

void write_trinet(std::ostream& out, const ColoredTrinet& g,
                  std::optional<VertexId> writer = std::nullopt);
void write_trinet_file(const std::string& path, const ColoredTrinet& g,
                       std::optional<VertexId> writer = std::nullopt);

// DOT with color="red|blue|green" per edge; the writer, when given, is marked
// with a doubled outline.
void write_dot(std::ostream& out, const ColoredTrinet& g,
               std::optional<VertexId> writer = std::nullopt);

// GraphML with a <data key="color"> entry per edge.
void write_graphml(std::ostream& out, const ColoredTrinet& g,
                   std::optional<VertexId> writer = std::nullopt);

// CSV with a "t,value" header.
void write_series_csv(std::ostream& out, const Series& s);

}  // namespace trinet
