#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "trinet/graph.hpp"
#include "trinet/rule.hpp"

namespace trinet {

// The unit of simulation: a graph, the writer's vertex, and the step counter.
struct SystemState {
  ColoredTrinet graph;
  VertexId writer = 0;
  std::int64_t time = 0;
};

inline SystemState cube_state() { return SystemState{make_cube(), 0, 0}; }
inline SystemState k33_state() { return SystemState{make_k33(), 0, 0}; }

struct StepReport {
  Surroundings observed = Surroundings::None;
  RewriteKind rewrite = RewriteKind::Keep;
  int vertex_delta = 0;
  bool multi_linked_noop = false;  // surroundings undefined; nothing was done
  bool graph_changed = false;
  bool writer_moved = false;
  // Set when a shrink/exchange rewrite could not apply (wrong local shape);
  // the step degrades to a no-op and the reason lands here.
  std::optional<std::string> anomaly;
};

// Applies one update: read the writer's surroundings, look the action up in
// the rule, move the writer on the pre-rewrite graph, rewrite at the writer's
// previous location, bump time. Structural anomalies never throw; they are
// reported and the state is left unchanged except for time.
StepReport step(SystemState& state, const Rule& rule);

// Convenience driver. The optional observer sees the state *after* each step
// together with that step's report; returning false stops early.
using StepObserver = std::function<bool(const SystemState&, const StepReport&)>;
void run(SystemState& state, const Rule& rule, std::int64_t steps,
         const StepObserver& observer = nullptr);

}  // namespace trinet
