#include "trinet/rule.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

#include "trinet/errors.hpp"

namespace trinet {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char ch) {
    skip_ws();
    if (pos < text.size() && text[pos] == ch) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_arrow() {
    skip_ws();
    if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
      pos += 2;
      return true;
    }
    return false;
  }
  // Longest run of lowercase letters / digits.
  std::string_view word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::islower(static_cast<unsigned char>(text[pos])) ||
            std::isdigit(static_cast<unsigned char>(text[pos]))))
      ++pos;
    return text.substr(start, pos - start);
  }
};

MoveWord parse_move_word(std::string_view token, std::size_t at, std::size_t max_len) {
  if (token.empty()) throw ParseError("expected a move word", at);
  if (token.size() > max_len)
    throw ParseError("move word '" + std::string(token) + "' longer than the cap of " +
                         std::to_string(max_len),
                     at);
  MoveWord w;
  w.reserve(token.size());
  for (char ch : token) {
    Color c;
    if (!color_from_char(ch, c))
      throw ParseError(std::string("bad color letter '") + ch + "'", at);
    w.push_back(c);
  }
  return w;
}

Action parse_action_at(Cursor& cur, std::size_t max_word_len) {
  cur.skip_ws();
  std::size_t at = cur.pos;
  std::string_view tok = cur.word();
  if (tok == "none") return none_action();

  Action a;
  if (tok == "keep" || tok == "replace") {
    a.rewrite = (tok == "replace") ? RewriteKind::Expand : RewriteKind::Keep;
    cur.skip_ws();
    at = cur.pos;
    tok = cur.word();
  }
  if (tok != "move")
    throw ParseError("expected 'none', 'keep', 'replace' or 'move', got '" + std::string(tok) + "'",
                     at);
  cur.skip_ws();
  std::size_t word_at = cur.pos;
  a.move = parse_move_word(cur.word(), word_at, max_word_len);
  return a;
}

}  // namespace

Action parse_action(std::string_view text, std::size_t max_word_len) {
  Cursor cur{text};
  Action a = parse_action_at(cur, max_word_len);
  if (!cur.done()) throw ParseError("trailing input after action", cur.pos);
  return a;
}

Rule parse_rule(std::string_view text, std::size_t max_word_len) {
  Rule rule;
  std::array<bool, 4> seen{};
  Cursor cur{text};
  if (cur.done()) return rule;  // all types default to none
  while (true) {
    cur.skip_ws();
    std::size_t at = cur.pos;
    std::string_view tok = cur.word();
    Surroundings type;
    if (tok.size() != 1 || !surroundings_from_char(tok[0], type))
      throw ParseError("expected a surroundings type (0, r, b or g)", at);
    if (seen[static_cast<std::size_t>(surroundings_index(type))])
      throw ParseError("duplicate clause for type '" + std::string(tok) + "'", at);
    seen[static_cast<std::size_t>(surroundings_index(type))] = true;
    if (!cur.eat_arrow()) throw ParseError("expected '->'", cur.pos);
    rule.action(type) = parse_action_at(cur, max_word_len);
    if (cur.done()) break;
    if (!cur.eat(';')) throw ParseError("expected ';' between clauses", cur.pos);
    if (cur.done()) break;  // tolerate a trailing separator
  }
  return rule;
}

std::string format_action(const Action& a) {
  if (a.is_none()) return "none";
  std::string s;
  switch (a.rewrite) {
    case RewriteKind::Keep: s = "keep"; break;
    case RewriteKind::Expand: s = "replace"; break;
    case RewriteKind::Shrink: s = "shrink"; break;      // engine extension, not DSL
    case RewriteKind::Exchange: s = "exchange"; break;  // engine extension, not DSL
  }
  s += " move ";
  s += format_word(a.move);
  return s;
}

std::string format_rule(const Rule& rule) {
  std::string s;
  bool first = true;
  for (Surroundings t : kSurroundings) {
    if (!first) s += "; ";
    first = false;
    s += surroundings_char(t);
    s += " -> ";
    s += format_action(rule.action(t));
  }
  return s;
}

namespace {

Color swap_rb(Color c) {
  if (c == Color::Red) return Color::Blue;
  if (c == Color::Blue) return Color::Red;
  return c;
}

Action conjugate_action(Action a) {
  for (Color& c : a.move) c = swap_rb(c);
  for (EdgeSelector& sel : a.exchange_edges) {
    for (Color& c : sel.path) c = swap_rb(c);
    sel.color = swap_rb(sel.color);
  }
  return a;
}

Action normalized(Action a) {
  // A length-2 same-color walk returns the writer, so keep+cc is "none" and
  // expand+cc is "expand in place".
  bool returns = a.move.empty() || (a.move.size() == 2 && a.move[0] == a.move[1]);
  if (returns && (a.rewrite == RewriteKind::Keep || a.rewrite == RewriteKind::Expand))
    a.move.clear();
  return a;
}

}  // namespace

Rule conjugate_rule(const Rule& rule) {
  Rule out;
  out.action(Surroundings::None) = conjugate_action(rule.action(Surroundings::None));
  out.action(Surroundings::Red) = conjugate_action(rule.action(Surroundings::Blue));
  out.action(Surroundings::Blue) = conjugate_action(rule.action(Surroundings::Red));
  out.action(Surroundings::Green) = conjugate_action(rule.action(Surroundings::Green));
  return out;
}

bool semantically_equal(const Rule& a, const Rule& b) {
  for (Surroundings t : kSurroundings)
    if (normalized(a.action(t)) != normalized(b.action(t))) return false;
  return true;
}

std::optional<std::array<bool, 3>> action_colors(const Action& a) {
  Action n = normalized(a);
  if (n.is_none()) return std::nullopt;
  std::array<bool, 3> used{};
  for (Color c : n.move) used[static_cast<std::size_t>(color_index(c))] = true;
  for (const EdgeSelector& sel : n.exchange_edges) {
    for (Color c : sel.path) used[static_cast<std::size_t>(color_index(c))] = true;
    used[static_cast<std::size_t>(color_index(sel.color))] = true;
  }
  return used;
}

namespace {

// At a type-c vertex the interlinked pair is the two non-c neighbors (the
// c-colored neighbor cannot carry a second c edge), so two-letter walks
// starting into the interlink collapse onto single hops: br = g and gr = b at
// a red-type vertex, rb = g and gb = r at a blue-type vertex. The option
// lists enumerate one word per distinct destination picture: 9 moves plus 3
// in-place triangle placements for type-0, and "none" + 7 moves per rewrite
// + 3 placements for types r and b.

std::vector<MoveWord> all_words_lexicographic() {
  // r < b < g; a word sorts before its extensions.
  std::vector<MoveWord> out;
  for (Color c1 : kColors) {
    out.push_back({c1});
    for (Color c2 : kColors) out.push_back({c1, c2});
  }
  return out;
}

bool collapses_at(const MoveWord& w, Color type_color) {
  // A two-letter word whose first hop reaches the interlinked pair and whose
  // second hop runs along the interlink edge duplicates a single hop to the
  // pair's other vertex.
  return w.size() == 2 && w[0] != type_color && w[1] == type_color;
}

OptionTable build_fallback() {
  OptionTable t;
  for (const MoveWord& w : all_words_lexicographic())
    t.type0.push_back(Action{RewriteKind::Expand, w, {}});

  auto interlinked_list = [](Color type_color) {
    std::vector<Action> list;
    list.push_back(none_action());
    for (const MoveWord& w : all_words_lexicographic()) {
      if (w.size() == 2 && w[0] == w[1]) continue;  // keep + cc is none again
      if (collapses_at(w, type_color)) continue;
      list.push_back(Action{RewriteKind::Keep, w, {}});
    }
    for (const MoveWord& w : all_words_lexicographic()) {
      if (collapses_at(w, type_color)) continue;
      list.push_back(Action{RewriteKind::Expand, w, {}});
    }
    return list;
  };
  t.type_r = interlinked_list(Color::Red);
  t.type_b = interlinked_list(Color::Blue);
  t.validate();
  return t;
}

}  // namespace

const OptionTable& OptionTable::fallback() {
  static const OptionTable table = build_fallback();
  return table;
}

void OptionTable::validate() const {
  auto check = [](const std::vector<Action>& list, std::size_t want, const char* name) {
    if (list.size() != want)
      throw BadTable(std::string(name) + " has " + std::to_string(list.size()) +
                     " entries, expected " + std::to_string(want));
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j)
        if (list[i] == list[j])
          throw BadTable(std::string(name) + " has duplicate entry '" + format_action(list[i]) +
                         "'");
  };
  check(type0, 12, "[type0]");
  check(type_r, 18, "[typeR]");
  check(type_b, 18, "[typeB]");
}

int OptionTable::rule_count() const {
  return static_cast<int>(type0.size() * type_r.size() * type_b.size());
}

std::uint64_t OptionTable::content_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&h](std::string_view s) {
    for (char ch : s) {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ull;
    }
  };
  for (const auto* list : {&type0, &type_r, &type_b}) {
    feed("#");
    for (const Action& a : *list) {
      feed(format_action(a));
      feed("\n");
    }
  }
  return h;
}

OptionTable OptionTable::parse(std::istream& in) {
  OptionTable t;
  std::vector<Action>* section = nullptr;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string_view sv(line);
    while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front()))) sv.remove_prefix(1);
    while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.back()))) sv.remove_suffix(1);
    if (sv.empty()) continue;
    if (sv == "[type0]")
      section = &t.type0;
    else if (sv == "[typeR]")
      section = &t.type_r;
    else if (sv == "[typeB]")
      section = &t.type_b;
    else if (sv.front() == '[')
      throw ParseError("unknown section '" + std::string(sv) + "'", lineno);
    else if (!section)
      throw ParseError("action line before any section header", lineno);
    else
      section->push_back(parse_action(sv));
  }
  t.validate();
  return t;
}

Rule rule_from_id(RuleId id, const OptionTable& table) {
  const int nr = static_cast<int>(table.type_r.size());
  const int nb = static_cast<int>(table.type_b.size());
  if (id < 0 || id >= table.rule_count())
    throw std::out_of_range("rule id " + std::to_string(id) + " outside 0.." +
                            std::to_string(table.rule_count() - 1));
  const int ib = id % nb;
  const int ir = (id / nb) % nr;
  const int i0 = id / (nb * nr);
  Rule rule;
  rule.action(Surroundings::None) = table.type0[static_cast<std::size_t>(i0)];
  rule.action(Surroundings::Red) = table.type_r[static_cast<std::size_t>(ir)];
  rule.action(Surroundings::Blue) = table.type_b[static_cast<std::size_t>(ib)];
  rule.action(Surroundings::Green) = none_action();
  return rule;
}

std::optional<RuleId> rule_to_id(const Rule& rule, const OptionTable& table) {
  if (!rule.action(Surroundings::Green).is_none()) return std::nullopt;
  auto index_of = [](const std::vector<Action>& list, const Action& a) -> int {
    auto it = std::find(list.begin(), list.end(), a);
    return it == list.end() ? -1 : static_cast<int>(it - list.begin());
  };
  int i0 = index_of(table.type0, rule.action(Surroundings::None));
  int ir = index_of(table.type_r, rule.action(Surroundings::Red));
  int ib = index_of(table.type_b, rule.action(Surroundings::Blue));
  if (i0 < 0 || ir < 0 || ib < 0) return std::nullopt;
  return (i0 * static_cast<int>(table.type_r.size()) + ir) * static_cast<int>(table.type_b.size()) +
         ib;
}

void enumerate_space(const OptionTable& table,
                     const std::function<void(RuleId, const Rule&)>& fn) {
  table.validate();
  const int n = table.rule_count();
  for (RuleId id = 0; id < n; ++id) fn(id, rule_from_id(id, table));
}

bool is_canonical_shape(const Rule& rule) {
  if (!rule.action(Surroundings::Green).is_none()) return false;
  const Action& a0 = rule.action(Surroundings::None);
  if (a0.rewrite != RewriteKind::Expand || a0.move.empty() || a0.move.size() > 2) return false;
  for (Surroundings t : {Surroundings::Red, Surroundings::Blue}) {
    const Action& a = rule.action(t);
    if (a.is_none()) continue;
    if (a.rewrite != RewriteKind::Keep && a.rewrite != RewriteKind::Expand) return false;
    if (a.move.empty() || a.move.size() > 2) return false;
  }
  return true;
}

}  // namespace trinet
