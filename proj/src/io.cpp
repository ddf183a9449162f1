#include "trinet/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "trinet/errors.hpp"

namespace trinet {

LoadedTrinet read_trinet(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError("empty input, expected 'trinet v1'", lineno);
  {
    std::istringstream hs(line);
    std::string word, version;
    hs >> word >> version;
    if (word != "trinet" || version != "v1")
      throw ParseError("expected header 'trinet v1'", lineno);
  }
  if (!next_line()) throw ParseError("expected 'vertices N'", lineno);
  int n = -1;
  {
    std::istringstream vs(line);
    std::string word;
    vs >> word >> n;
    if (word != "vertices" || vs.fail() || n < 2)
      throw ParseError("expected 'vertices N' with N >= 2", lineno);
  }

  ColoredTrinet g = ColoredTrinet::with_vertices(n);
  std::vector<std::array<bool, 3>> assigned(static_cast<std::size_t>(n), {false, false, false});
  std::optional<VertexId> writer;

  while (next_line()) {
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "edge") {
      long u = -1, v = -1;
      std::string cs;
      ls >> u >> v >> cs;
      if (ls.fail() || cs.size() != 1) throw ParseError("malformed edge line", lineno);
      Color c;
      if (!color_from_char(cs[0], c)) throw ParseError("bad edge color '" + cs + "'", lineno);
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw ParseError("edge endpoint out of range", lineno);
      if (u == v) throw ParseError("self-loop is not a valid trinet edge", lineno);
      auto& au = assigned[static_cast<std::size_t>(u)][static_cast<std::size_t>(color_index(c))];
      auto& av = assigned[static_cast<std::size_t>(v)][static_cast<std::size_t>(color_index(c))];
      if (au || av)
        throw ParseError("vertex already has a " + std::string(color_name(c)) + " edge", lineno);
      au = av = true;
      g.link(static_cast<VertexId>(u), static_cast<VertexId>(v), c);
    } else if (word == "writer") {
      long w = -1;
      ls >> w;
      if (ls.fail() || w < 0 || w >= n) throw ParseError("bad writer vertex", lineno);
      writer = static_cast<VertexId>(w);
    } else {
      throw ParseError("unexpected line '" + line + "'", lineno);
    }
  }
  for (int v = 0; v < n; ++v)
    for (Color c : kColors)
      if (!assigned[static_cast<std::size_t>(v)][static_cast<std::size_t>(color_index(c))])
        throw ParseError("vertex " + std::to_string(v) + " is missing its " + color_name(c) +
                             " edge",
                         lineno);
  return LoadedTrinet{std::move(g), writer};
}

LoadedTrinet read_trinet_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return read_trinet(in);
}

void write_trinet(std::ostream& out, const ColoredTrinet& g, std::optional<VertexId> writer) {
  out << "trinet v1\n";
  out << "vertices " << g.vertex_count() << "\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (Color c : kColors) {
      const VertexId u = g.neighbor(v, c);
      if (v < u) out << "edge " << v << " " << u << " " << color_char(c) << "\n";
    }
  if (writer) out << "writer " << *writer << "\n";
}

void write_trinet_file(const std::string& path, const ColoredTrinet& g,
                       std::optional<VertexId> writer) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_trinet(out, g, writer);
  if (!out) throw IoError("failed writing '" + path + "'");
}

void write_dot(std::ostream& out, const ColoredTrinet& g, std::optional<VertexId> writer) {
  out << "graph trinet {\n  node [shape=point];\n";
  if (writer) out << "  " << *writer << " [peripheries=2];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (Color c : kColors) {
      const VertexId u = g.neighbor(v, c);
      if (v < u) out << "  " << v << " -- " << u << " [color=\"" << color_name(c) << "\"];\n";
    }
  out << "}\n";
}

void write_graphml(std::ostream& out, const ColoredTrinet& g, std::optional<VertexId> writer) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"color\" for=\"edge\" attr.name=\"color\" attr.type=\"string\"/>\n"
      << "  <key id=\"writer\" for=\"node\" attr.name=\"writer\" attr.type=\"boolean\"/>\n"
      << "  <graph id=\"trinet\" edgedefault=\"undirected\">\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "    <node id=\"n" << v << "\"";
    if (writer && *writer == v)
      out << "><data key=\"writer\">true</data></node>\n";
    else
      out << "/>\n";
  }
  int edge_id = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (Color c : kColors) {
      const VertexId u = g.neighbor(v, c);
      if (v < u)
        out << "    <edge id=\"e" << edge_id++ << "\" source=\"n" << v << "\" target=\"n" << u
            << "\"><data key=\"color\">" << color_name(c) << "</data></edge>\n";
    }
  out << "  </graph>\n</graphml>\n";
}

void write_series_csv(std::ostream& out, const Series& s) {
  out << "t,value\n";
  std::ostringstream val;
  val << std::setprecision(17);
  for (const auto& [t, v] : s.points) {
    val.str("");
    val << v;
    out << t << "," << val.str() << "\n";
  }
}

}  // namespace trinet
