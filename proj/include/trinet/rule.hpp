#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trinet/color.hpp"

namespace trinet {

enum class RewriteKind : std::uint8_t { Keep = 0, Expand, Shrink, Exchange };

// Selects an edge relative to the writer's pre-move position: walk `path`,
// then take that vertex's `color` edge. Used by the exchange rewrite.
struct EdgeSelector {
  MoveWord path;
  Color color = Color::Red;
  bool operator==(const EdgeSelector&) const = default;
};

// One table entry: an optional rewrite plus a move word. The step semantics
// are: remember p = writer, move the writer along `move` on the pre-rewrite
// graph, then apply `rewrite` at p. A writer whose walk ends back on an
// expanded p continues on the triangle vertex that inherited its final walk
// edge (the vertex whose external color is the word's last letter).
struct Action {
  RewriteKind rewrite = RewriteKind::Keep;
  MoveWord move;
  std::vector<EdgeSelector> exchange_edges;  // exactly 2 when rewrite == Exchange

  bool is_none() const { return rewrite == RewriteKind::Keep && move.empty(); }
  bool operator==(const Action&) const = default;
};

inline Action none_action() { return Action{}; }

// Map from the four surroundings types to actions.
struct Rule {
  std::array<Action, 4> by_type{};  // indexed by surroundings_index()

  const Action& action(Surroundings s) const {
    return by_type[static_cast<std::size_t>(surroundings_index(s))];
  }
  Action& action(Surroundings s) {
    return by_type[static_cast<std::size_t>(surroundings_index(s))];
  }
  bool operator==(const Rule&) const = default;
};

// DSL, whitespace-insensitive:
//   rule   := clause (";" clause)*
//   clause := type "->" action        type := "0" | "r" | "b" | "g"
//   action := "none" | [("keep"|"replace")] "move" word
//   word   := color+  (length capped, default 2)
// Omitted types default to none; omitted rewrite keyword defaults to keep.
// Throws ParseError with the character position.
Rule parse_rule(std::string_view text, std::size_t max_word_len = 2);
std::string format_rule(const Rule& rule);

// Swaps red and blue everywhere: in the surroundings keys and in every move
// word and selector. An involution.
Rule conjugate_rule(const Rule& rule);

// Behavioral equality: a keep-rewrite whose walk provably returns to the
// writer (empty or cc word) is the same as "none"; an expand move of the same
// shape is the same as expanding in place.
bool semantically_equal(const Rule& a, const Rule& b);

// The traversal-based movement colors an action can use; nullopt for none.
std::optional<std::array<bool, 3>> action_colors(const Action& a);

// The enumerated rule space: explicit option lists for the three active
// surroundings types. Canonical rules always expand on type-0 and never act
// on type-green.
struct OptionTable {
  std::vector<Action> type0;   // 12 entries
  std::vector<Action> type_r;  // 18 entries
  std::vector<Action> type_b;  // 18 entries

  // Built-in table, one entry per distinct destination picture. Type-0:
  // expand x all 12 words of length 1 or 2 (cc words place the writer on the
  // triangle vertex of that color). Types r and b: "none", keep x the 7
  // distinct moves, expand x those 7 plus the 3 in-place placements; the two
  // walks that run back along the interlink edge collapse onto single hops
  // and are left out. Lists are ordered by (rewrite, word) under r < b < g,
  // which reproduces the 12 x 18 x 18 space and is closed under red/blue
  // conjugation.
  static const OptionTable& fallback();

  // Loads the format described in the docs: one action per line in DSL action
  // syntax under headers [type0], [typeR], [typeB]. Throws ParseError/BadTable.
  static OptionTable parse(std::istream& in);

  int rule_count() const;
  // Throws BadTable on wrong lengths or duplicate entries.
  void validate() const;
  // FNV-1a over the formatted entries; identifies the table in manifests.
  std::uint64_t content_hash() const;
};

using RuleId = int;

// Mixed-radix decode: id = (i0 * |type_r| + ir) * |type_b| + ib.
Rule rule_from_id(RuleId id, const OptionTable& table);
// Exact (literal) table lookup; nullopt when some part is not a table entry.
std::optional<RuleId> rule_to_id(const Rule& rule, const OptionTable& table);

// Calls fn(id, rule) for every rule in RuleId order.
void enumerate_space(const OptionTable& table,
                     const std::function<void(RuleId, const Rule&)>& fn);

// A rule expressible in the canonical space shape: type-g none, type-0 an
// expand with a word of length 1..2, types r/b keep-or-expand with words of
// length 2 (or none).
bool is_canonical_shape(const Rule& rule);

std::string format_action(const Action& a);
Action parse_action(std::string_view text, std::size_t max_word_len = 2);

}  // namespace trinet
