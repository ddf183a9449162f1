#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "trinet/rule.hpp"
#include "trinet/system.hpp"

namespace trinet {

struct Budget {
  std::int64_t max_steps = 200'000;
  std::int64_t max_vertices = 500'000;
  int max_candidate_period = 4'000;
};

// A frozen trajectory: the network stops changing, and the writer either
// stops as well or falls into an exact orbit on the static network.
struct FixedResult {
  bool halted = false;
  int writer_period = 0;          // 0 when halted
  std::int64_t settle_time = 0;   // first time the graph has its final form
  std::int64_t detect_time = 0;   // time at which the certificate closed
  int final_vertices = 0;
  bool green_halt = false;        // halted on a green interlink
  bool anomaly_halt = false;      // halted on an undefined surroundings type
};

// Certified repetitive growth: the radius-r ball around the writer at
// `transient` is rooted-isomorphic to the ball at transient+period, the
// writer stayed within r-1 of its anchor on old vertices in between, and the
// network grew. Determinism then repeats the window forever.
struct RepetitiveResult {
  std::int64_t transient = 0;  // first time certification holds
  int period = 0;
  int radius = 0;
  bool replay_ok = true;  // ball at transient+2p re-checked; must never fail
  int vertices_at_certification = 0;
};

enum class Movement : std::uint8_t { Cyclic, Bouncing, Unknown };
const char* movement_name(Movement m);

// Trail evidence. Confinement uses the movement colors actually exercised
// over the trailing window: drawing on at most two edge colors pins the
// writer to one alternating cycle. Directional evidence comes from the
// position arrows: a backtrack is an arrow returning to where the previous
// arrow started, and long sweeps in both directions mean bouncing.
struct TrailStats {
  bool confined = false;
  int colors_used = 0;  // distinct movement colors in the window
  std::int64_t longest_run = 0;
  std::int64_t second_longest_run = 0;
  std::int64_t backtracks = 0;
  std::int64_t window = 0;
};

struct ClassLabel {
  enum class Kind : std::uint8_t { Fixed, Repetitive, Elaborate, Unresolved };
  Kind kind = Kind::Unresolved;
  std::optional<FixedResult> fixed;
  std::optional<RepetitiveResult> repetitive;
  std::optional<std::int64_t> state_cycle;  // full-state recurrence (shrink/exchange rules)
  Movement movement = Movement::Unknown;    // for elaborate labels
  std::optional<TrailStats> trail;
  std::int64_t steps_used = 0;
  int final_vertices = 0;
  std::int64_t anomalies = 0;  // multi-linked no-ops seen
};
const char* kind_name(ClassLabel::Kind k);

std::optional<FixedResult> detect_fixed(SystemState state, const Rule& rule, const Budget& budget);

std::optional<RepetitiveResult> detect_repetitive(const Rule& rule, const SystemState& init,
                                                  const Budget& budget);

// Static movement analysis. Cyclic is provable when every active move word
// draws on one 2-color set and all the two-color words agree, so the writer
// advances uniformly around one alternating cycle. Anything subtler falls
// back to trail inspection.
std::optional<Movement> detect_onedim(const Rule& rule);

// Exact full-state recurrence via canonical-form hashing; only meaningful for
// rules whose rewrites can shrink or rewire (a growing network never recurs).
std::optional<std::int64_t> detect_periodic_state(const Rule& rule, const SystemState& init,
                                                  const Budget& budget,
                                                  int max_hash_vertices = 4096);

TrailStats trail_stats(const Rule& rule, const SystemState& init, const Budget& budget,
                       std::int64_t window = 10'000);

// Runs the detectors in order (fixed, state recurrence, repetitive
// certification) and falls back to elaborate/unresolved labeling from
// movement evidence.
ClassLabel classify(const Rule& rule, const SystemState& init, const Budget& budget);

}  // namespace trinet
