#include <doctest.h>

#include <sstream>

#include "trinet/catalog.hpp"
#include "trinet/errors.hpp"
#include "trinet/io.hpp"
#include "trinet/iso.hpp"
#include "trinet/sweep.hpp"
#include "trinet/system.hpp"

using namespace trinet;

TEST_CASE("trinet text round trip") {
  SystemState state = cube_state();
  const Rule rule = cyclic_doubling_rule();
  for (int i = 0; i < 25; ++i) step(state, rule);
  std::ostringstream out;
  write_trinet(out, state.graph, state.writer);
  std::istringstream in(out.str());
  const LoadedTrinet back = read_trinet(in);
  REQUIRE(back.writer.has_value());
  CHECK(rooted_iso(back.graph, *back.writer, state.graph, state.writer));
}

TEST_CASE("trinet parser rejects malformed input with line numbers") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_trinet(in);
  };
  CHECK_THROWS_AS(parse("nope\n"), ParseError);
  CHECK_THROWS_AS(parse("trinet v1\nvertices 1\n"), ParseError);
  // Vertex 0 given two red edges: the parser points at the offending line.
  try {
    parse("trinet v1\nvertices 4\nedge 0 1 r\nedge 0 2 r\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  // Missing color assignment is caught at end of input.
  CHECK_THROWS_AS(parse("trinet v1\nvertices 4\nedge 0 1 r\n"), ParseError);
  CHECK_THROWS_AS(parse("trinet v1\nvertices 4\nedge 0 0 g\n"), ParseError);
  CHECK_THROWS_AS(parse("trinet v1\nvertices 4\nedge 0 9 b\n"), ParseError);
}

TEST_CASE("dot export lists each colored edge once") {
  std::ostringstream out;
  write_dot(out, make_cube(), 0);
  const std::string text = out.str();
  std::size_t edges = 0, reds = 0;
  for (std::size_t at = text.find(" -- "); at != std::string::npos; at = text.find(" -- ", at + 1))
    ++edges;
  for (std::size_t at = text.find("color=\"red\""); at != std::string::npos;
       at = text.find("color=\"red\"", at + 1))
    ++reds;
  CHECK(edges == 12);
  CHECK(reds == 4);
}

TEST_CASE("graphml export carries edge colors") {
  std::ostringstream out;
  write_graphml(out, make_k33(), std::nullopt);
  const std::string text = out.str();
  CHECK(text.find("<data key=\"color\">green</data>") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t at = text.find("<edge "); at != std::string::npos;
       at = text.find("<edge ", at + 1))
    ++edges;
  CHECK(edges == 9);
}

TEST_CASE("series csv format") {
  Series s{"demo", {{0, 8}, {1, 10}, {2, 12.5}}};
  std::ostringstream out;
  write_series_csv(out, s);
  CHECK(out.str() == "t,value\n0,8\n1,10\n2,12.5\n");
}

TEST_CASE("sweep records serialize deterministically") {
  RuleRecord rec;
  rec.rule_id = 658;
  rec.rule_text = format_rule(cyclic_doubling_rule());
  rec.init = "cube";
  rec.label.kind = ClassLabel::Kind::Elaborate;
  rec.label.movement = Movement::Cyclic;
  rec.label.steps_used = 100;
  rec.label.final_vertices = 208;
  const std::string a = record_to_json(rec);
  const std::string b = record_to_json(rec);
  CHECK(a == b);
  CHECK(a.find("\"schema\":\"trinet-sweep-v1\"") != std::string::npos);
  CHECK(a.find("\"rule_id\":658") != std::string::npos);
  CHECK(a.find("\"movement\":\"cyclic\"") != std::string::npos);
  CHECK(a.find('\n') == std::string::npos);  // one line per record
}
