#pragma once

#include "trinet/rule.hpp"

namespace trinet {

// A small catalog of rules the verifiers and tests refer to by behavior.

// Expands and hops red-then-blue on types 0 and blue; never acts on red or
// green. The writer circles an alternating red/blue track whose traversal
// time doubles; growth is exactly 8 + 2t from the cube.
inline Rule cyclic_doubling_rule() {
  return parse_rule("0 -> replace move rb; b -> replace move rb; r -> none; g -> none");
}

// Cyclic-track rule whose vertex count follows the golden-ratio closed form:
// type-0 expands and hops rb, type-r backs up br without rewriting, type-b
// expands and hops br.
inline Rule golden_growth_rule() {
  return parse_rule("0 -> replace move rb; r -> keep move br; b -> replace move br");
}

// Rebuilds its own surroundings every step: the writer keeps replacing the
// red-external vertex of the newest triangle in place, extruding a ladder
// with a single triangle at the growing end. Vertex count is 8 + 2t and the
// writer's radius-1 ball repeats with period one from t = 1.
inline Rule ladder_growth_rule() {
  return parse_rule("0 -> replace move rr; r -> replace move rr");
}

// The worked example rule: expand and move blue on type-0, drift red on
// type-b, halt on red or green. From the cube it freezes after three updates.
inline Rule halting_example_rule() {
  return parse_rule("0 -> replace move b; b -> keep move r");
}

}  // namespace trinet
