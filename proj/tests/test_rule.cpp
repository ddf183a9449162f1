#include <doctest.h>

#include <set>
#include <sstream>

#include "trinet/catalog.hpp"
#include "trinet/errors.hpp"
#include "trinet/rule.hpp"

using namespace trinet;

TEST_CASE("dsl parses the doubling rule") {
  const Rule r = parse_rule("0 -> replace move rb; b -> replace move rb; r -> none; g -> none");
  CHECK(r.action(Surroundings::None).rewrite == RewriteKind::Expand);
  CHECK(format_word(r.action(Surroundings::None).move) == "rb");
  CHECK(r.action(Surroundings::Blue).rewrite == RewriteKind::Expand);
  CHECK(r.action(Surroundings::Red).is_none());
  CHECK(r.action(Surroundings::Green).is_none());
  CHECK(r == cyclic_doubling_rule());
}

TEST_CASE("dsl defaults and keep") {
  const Rule r = parse_rule("b -> move r");
  CHECK(r.action(Surroundings::Blue).rewrite == RewriteKind::Keep);  // omitted keyword
  CHECK(format_word(r.action(Surroundings::Blue).move) == "r");
  CHECK(r.action(Surroundings::None).is_none());  // omitted types default to none
}

TEST_CASE("dsl errors carry positions") {
  CHECK_THROWS_AS(parse_rule("0 -> move rbg"), ParseError);  // word above the cap
  CHECK_NOTHROW(parse_rule("0 -> move rbg", 3));             // engine accepts longer words on request
  CHECK_THROWS_AS(parse_rule("0 -> move rb; 0 -> none"), ParseError);  // duplicate clause
  CHECK_THROWS_AS(parse_rule("x -> none"), ParseError);
  CHECK_THROWS_AS(parse_rule("0 none"), ParseError);
  CHECK_THROWS_AS(parse_rule("0 -> move rq"), ParseError);
  try {
    parse_rule("0 -> replace move rb; b -> wiggle");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 27);  // points at the bad token
  }
}

TEST_CASE("dsl round trip over the whole space") {
  const OptionTable& table = OptionTable::fallback();
  std::set<std::string> texts;
  enumerate_space(table, [&](RuleId id, const Rule& rule) {
    const std::string text = format_rule(rule);
    texts.insert(text);
    CHECK(parse_rule(text) == rule);
    CHECK(rule_to_id(rule, table) == id);
  });
  CHECK(texts.size() == 3888);  // pairwise distinct as table entries
}

TEST_CASE("fallback table shape") {
  const OptionTable& t = OptionTable::fallback();
  CHECK(t.type0.size() == 12);
  CHECK(t.type_r.size() == 18);
  CHECK(t.type_b.size() == 18);
  CHECK(t.rule_count() == 3888);
  // Rule 0 combines the first option of each list.
  const Rule r0 = rule_from_id(0, t);
  CHECK(r0.action(Surroundings::None) == Action{RewriteKind::Expand, MoveWord{Color::Red}, {}});
  CHECK(r0.action(Surroundings::Red).is_none());
  CHECK(r0.action(Surroundings::Blue).is_none());
  for (RuleId id : {0, 1, 17, 3887}) CHECK(is_canonical_shape(rule_from_id(id, t)));
}

TEST_CASE("option table file parsing") {
  std::ostringstream table_text;
  table_text << "[type0]\n";
  for (const Action& a : OptionTable::fallback().type0) table_text << format_action(a) << "\n";
  table_text << "[typeR]\n";
  for (const Action& a : OptionTable::fallback().type_r) table_text << format_action(a) << "\n";
  table_text << "[typeB]\n";
  for (const Action& a : OptionTable::fallback().type_b) table_text << format_action(a) << "\n";
  std::istringstream in(table_text.str());
  const OptionTable parsed = OptionTable::parse(in);
  CHECK(parsed.content_hash() == OptionTable::fallback().content_hash());

  std::istringstream bad("[type0]\nkeep move rr\n");
  CHECK_THROWS_AS(OptionTable::parse(bad), BadTable);  // wrong lengths
}

TEST_CASE("conjugation swaps red and blue") {
  const Rule r = cyclic_doubling_rule();
  const Rule c = conjugate_rule(r);
  CHECK(format_word(c.action(Surroundings::None).move) == "br");
  CHECK(c.action(Surroundings::Red).rewrite == RewriteKind::Expand);  // roles swapped
  CHECK(format_word(c.action(Surroundings::Red).move) == "br");
  CHECK(c.action(Surroundings::Blue).is_none());
  CHECK(conjugate_rule(c) == r);  // involution
  // The canonical space is closed under conjugation.
  const OptionTable& table = OptionTable::fallback();
  for (RuleId id : {0, 1, 500, 1234, 2048, 3887}) {
    const Rule rule = rule_from_id(id, table);
    CHECK(rule_to_id(conjugate_rule(rule), table).has_value());
  }
}

TEST_CASE("semantic equality folds self-returning keeps") {
  CHECK(semantically_equal(parse_rule("r -> keep move rr"), parse_rule("r -> none")));
  CHECK(semantically_equal(parse_rule("r -> keep move gg"), parse_rule("r -> keep move bb")));
  CHECK(!semantically_equal(parse_rule("r -> keep move rb"), parse_rule("r -> none")));
  CHECK(semantically_equal(parse_rule("0 -> replace move gg"), parse_rule("0 -> replace move rr")));
}

TEST_CASE("four active parts is accepted but not canonical") {
  const Rule r = parse_rule("g -> replace move r");
  CHECK(!is_canonical_shape(r));
  CHECK(!rule_to_id(r, OptionTable::fallback()).has_value());
}
