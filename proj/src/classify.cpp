#include "trinet/classify.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "trinet/iso.hpp"

namespace trinet {

const char* movement_name(Movement m) {
  switch (m) {
    case Movement::Cyclic: return "cyclic";
    case Movement::Bouncing: return "bouncing";
    case Movement::Unknown: return "unknown";
  }
  return "?";
}

const char* kind_name(ClassLabel::Kind k) {
  switch (k) {
    case ClassLabel::Kind::Fixed: return "fixed";
    case ClassLabel::Kind::Repetitive: return "repetitive";
    case ClassLabel::Kind::Elaborate: return "elaborate";
    case ClassLabel::Kind::Unresolved: return "unresolved";
  }
  return "?";
}

namespace {

bool rule_uses(const Rule& rule, RewriteKind kind) {
  for (Surroundings t : kSurroundings)
    if (rule.action(t).rewrite == kind) return true;
  return false;
}

// Writer-visit stamps that are valid only while the graph stays unchanged.
struct VisitTable {
  std::vector<std::pair<std::int64_t, std::int64_t>> stamp;  // (epoch, time)
  std::int64_t epoch = 1;

  void bump_epoch() { ++epoch; }
  // Records the visit; returns the previous visit time in this epoch, or -1.
  std::int64_t visit(VertexId v, std::int64_t now) {
    if (static_cast<std::size_t>(v) >= stamp.size())
      stamp.resize(static_cast<std::size_t>(v) + 64, {0, 0});
    auto& [e, t] = stamp[static_cast<std::size_t>(v)];
    const std::int64_t prev = (e == epoch) ? t : -1;
    e = epoch;
    t = now;
    return prev;
  }
};

// Online fixed-point detection folded into a simulation pass.
struct FixedWatcher {
  VisitTable visits;
  std::int64_t settle = 0;  // time the graph last changed

  void start(const SystemState& state) {
    settle = state.time;
    visits.visit(state.writer, state.time);
  }

  // Feed the post-step state; returns a result once certified.
  std::optional<FixedResult> observe(const SystemState& state, const StepReport& rep) {
    if (rep.graph_changed) {
      settle = state.time;
      visits.bump_epoch();
      visits.visit(state.writer, state.time);
      return std::nullopt;
    }
    if (!rep.writer_moved) {
      // A full zero-effect update: by determinism the state is frozen.
      FixedResult r;
      r.halted = true;
      r.writer_period = 0;
      r.settle_time = settle;
      r.detect_time = state.time - 1;
      r.final_vertices = state.graph.vertex_count();
      r.anomaly_halt = rep.multi_linked_noop || rep.anomaly.has_value();
      r.green_halt = !r.anomaly_halt && rep.observed == Surroundings::Green;
      return r;
    }
    const std::int64_t prev = visits.visit(state.writer, state.time);
    if (prev >= 0) {
      // Static graph plus a writer revisit: the orbit repeats exactly.
      FixedResult r;
      r.halted = false;
      r.writer_period = static_cast<int>(state.time - prev);
      r.settle_time = settle;
      r.detect_time = state.time;
      r.final_vertices = state.graph.vertex_count();
      return r;
    }
    return std::nullopt;
  }
};

// Smallest p with w[i] == w[i+p] for all valid i (KMP border rule).
std::int64_t minimal_period(const std::vector<std::int64_t>& w) {
  const std::int64_t n = static_cast<std::int64_t>(w.size());
  if (n == 0) return 0;
  std::vector<std::int64_t> fail(static_cast<std::size_t>(n) + 1, 0);
  fail[0] = -1;
  std::int64_t k = -1;
  for (std::int64_t i = 0; i < n; ++i) {
    while (k >= 0 && w[static_cast<std::size_t>(k)] != w[static_cast<std::size_t>(i)])
      k = fail[static_cast<std::size_t>(k)];
    ++k;
    fail[static_cast<std::size_t>(i) + 1] = k;
  }
  return n - fail[static_cast<std::size_t>(n)];
}

// Smallest p with w[i] == w[i+p] for all valid i (KMP border rule).
std::int64_t minimal_period(const std::vector<std::uint8_t>& w) {
  const std::int64_t n = static_cast<std::int64_t>(w.size());
  if (n == 0) return 0;
  std::vector<std::int64_t> fail(static_cast<std::size_t>(n) + 1, 0);
  fail[0] = -1;
  std::int64_t k = -1;
  for (std::int64_t i = 0; i < n; ++i) {
    while (k >= 0 && w[static_cast<std::size_t>(k)] != w[static_cast<std::size_t>(i)])
      k = fail[static_cast<std::size_t>(k)];
    ++k;
    fail[static_cast<std::size_t>(i) + 1] = k;
  }
  return n - fail[static_cast<std::size_t>(n)];
}

// Earliest index t0 such that d[t] == d[t+p] for every t in [t0, |d|-p).
std::int64_t periodic_from(const std::vector<std::uint8_t>& d, std::int64_t p) {
  std::int64_t t0 = static_cast<std::int64_t>(d.size()) - p;
  if (t0 < 0) return -1;
  for (std::int64_t t = t0 - 1; t >= 0; --t) {
    if (d[static_cast<std::size_t>(t)] != d[static_cast<std::size_t>(t) + static_cast<std::size_t>(p)])
      break;
    t0 = t;
  }
  return t0;
}

// Earliest index t0 such that d[t] == d[t+p] for every t in [t0, |d|-p).
std::int64_t periodic_from(const std::vector<std::int64_t>& d, std::int64_t p) {
  std::int64_t t0 = static_cast<std::int64_t>(d.size()) - p;
  if (t0 < 0) return -1;
  for (std::int64_t t = t0 - 1; t >= 0; --t) {
    if (d[static_cast<std::size_t>(t)] != d[static_cast<std::size_t>(t) + static_cast<std::size_t>(p)])
      break;
    t0 = t;
  }
  return t0;
}

struct CertOutcome {
  bool ok = false;
  int radius = 0;
  bool replay_ok = false;
};

// One certification attempt anchored at `anchor` (time t): simulate p steps,
// measure the writer's wander over the time-t graph, and compare the balls.
CertOutcome attempt_certificate(const SystemState& anchor, const Rule& rule, std::int64_t p,
                                const Budget& budget) {
  CertOutcome out;
  const int old_count = anchor.graph.vertex_count();
  SystemState fwd = anchor;
  std::vector<bool> old_alive(static_cast<std::size_t>(old_count), true);
  std::vector<VertexId> visited_old;
  for (std::int64_t s = 0; s < p; ++s) {
    const VertexId before = fwd.writer;
    const StepReport rep = step(fwd, rule);
    if (rep.multi_linked_noop || rep.anomaly) return out;
    if (rep.rewrite == RewriteKind::Expand && rep.graph_changed && before < old_count)
      old_alive[static_cast<std::size_t>(before)] = false;  // slot now holds a new vertex
    if (fwd.writer < old_count && old_alive[static_cast<std::size_t>(fwd.writer)])
      visited_old.push_back(fwd.writer);
    if (fwd.graph.vertex_count() > budget.max_vertices) return out;
  }
  if (fwd.graph.vertex_count() <= old_count) return out;  // no net growth

  const auto dist = bfs_distances(anchor.graph, anchor.writer);
  int wander = 0;
  for (VertexId v : visited_old) wander = std::max(wander, dist[static_cast<std::size_t>(v)]);
  const int radius = wander + 1;
  if (!rooted_ball_iso(anchor.graph, anchor.writer, fwd.graph, fwd.writer, radius)) return out;

  out.ok = true;
  out.radius = radius;
  // Soundness replay: p more steps and the ball must still match.
  for (std::int64_t s = 0; s < p; ++s) step(fwd, rule);
  out.replay_ok = rooted_ball_iso(anchor.graph, anchor.writer, fwd.graph, fwd.writer, radius);
  return out;
}

// Candidate extraction plus certification over a recorded history. Candidate
// periods come from the surroundings-type sequence: any ball-periodic tail
// forces a periodic type tail, while writer-index differences can stay
// aperiodic forever when the writer commutes between old and new index
// regions of the track. The ball certificate remains the actual gate.
std::optional<RepetitiveResult> certify_from_history(const Rule& rule, const SystemState& init,
                                                     const std::vector<std::uint8_t>& types,
                                                     const Budget& budget) {
  if (types.size() < 32) return std::nullopt;
  const std::int64_t H = static_cast<std::int64_t>(types.size());
  const std::int64_t W = std::min<std::int64_t>(
      H, std::max<std::int64_t>(3 * budget.max_candidate_period, 4096));
  std::vector<std::uint8_t> window(types.end() - W, types.end());
  const std::int64_t p0 = minimal_period(window);
  if (p0 <= 0 || p0 > budget.max_candidate_period || W < 2 * p0 + 8) return std::nullopt;

  // The state period is a multiple of the type period; try ascending
  // multiples with a bounded scan each, preferring the earliest passing time.
  constexpr int kMaxMultiples = 16;
  constexpr std::int64_t kScanCap = 768;
  for (int mult = 1; mult <= kMaxMultiples; ++mult) {
    const std::int64_t p = p0 * mult;
    if (p > budget.max_candidate_period) break;
    const std::int64_t t0 = periodic_from(types, p);
    if (t0 < 0 || H - t0 < 2 * p) continue;

    SystemState state = init;
    while (state.time - init.time < t0) step(state, rule);
    const std::int64_t scan_limit = std::min(kScanCap, std::max<std::int64_t>(3 * p, 64));
    for (std::int64_t k = 0; k <= scan_limit; ++k) {
      const CertOutcome got = attempt_certificate(state, rule, p, budget);
      // A replay failure means the matched balls were accidental; keep
      // scanning rather than certifying.
      if (got.ok && got.replay_ok) {
        RepetitiveResult r;
        r.transient = state.time;
        r.period = static_cast<int>(p);
        r.radius = got.radius;
        r.replay_ok = true;
        r.vertices_at_certification = state.graph.vertex_count();
        return r;
      }
      step(state, rule);
    }
  }
  return std::nullopt;
}

TrailStats stats_from_writers(const Rule& rule, const std::vector<VertexId>& writers,
                              const std::vector<std::uint8_t>& types, std::int64_t window) {
  TrailStats st;
  const std::int64_t n = static_cast<std::int64_t>(writers.size());
  st.window = std::min(window, n - 1);

  // Movement colors actually exercised over the trailing window. In-place
  // wiggles (normalized-away words) contribute nothing.
  std::array<bool, 3> used{};
  for (std::int64_t i = std::max<std::int64_t>(0, n - 1 - st.window); i + 1 < n; ++i) {
    const auto s = static_cast<Surroundings>(types[static_cast<std::size_t>(i)]);
    if (const auto colors = action_colors(rule.action(s)))
      for (int c = 0; c < 3; ++c) used[static_cast<std::size_t>(c)] |= (*colors)[static_cast<std::size_t>(c)];
  }
  st.colors_used = used[0] + used[1] + used[2];
  st.confined = st.colors_used <= 2;

  // Direction runs over the whole history: a backtrack is an arrow returning
  // to where the previous arrow started. Bouncing writers sweep long runs in
  // both directions; cyclic ones only stutter.
  std::int64_t run = 0;
  VertexId prev_from = kNoVertex;
  std::int64_t best = 0, second = 0;
  auto close_run = [&](std::int64_t len) {
    if (len >= best) {
      second = best;
      best = len;
    } else if (len > second) {
      second = len;
    }
  };
  for (std::int64_t i = 0; i + 1 < n; ++i) {
    const VertexId u = writers[static_cast<std::size_t>(i)];
    const VertexId v = writers[static_cast<std::size_t>(i + 1)];
    if (u == v) continue;
    if (prev_from != kNoVertex && v == prev_from) {
      ++st.backtracks;
      close_run(run);
      run = 0;
    }
    ++run;
    prev_from = u;
  }
  close_run(run);
  st.longest_run = best;
  st.second_longest_run = second;
  return st;
}

constexpr std::int64_t kBounceRunThreshold = 50;

Movement movement_from(const std::optional<Movement>& static_proof, const TrailStats& st) {
  if (static_proof) return *static_proof;
  if (!st.confined) return Movement::Unknown;
  if (st.backtracks >= 2 && st.second_longest_run >= kBounceRunThreshold) return Movement::Bouncing;
  return Movement::Cyclic;
}

}  // namespace

std::optional<Movement> detect_onedim(const Rule& rule) {
  std::array<bool, 3> used{};
  std::optional<MoveWord> common_word;
  bool any_active = false;
  bool uniform = true;
  bool has_single = false;
  for (Surroundings t : kSurroundings) {
    const Action& raw = rule.action(t);
    auto colors = action_colors(raw);
    if (!colors) continue;
    any_active = true;
    if (raw.rewrite != RewriteKind::Keep && raw.rewrite != RewriteKind::Expand) return std::nullopt;
    for (int i = 0; i < 3; ++i) used[static_cast<std::size_t>(i)] |= (*colors)[static_cast<std::size_t>(i)];
    const MoveWord& w = raw.move;
    if (w.size() == 1) has_single = true;
    if (w.size() == 2 && w[0] != w[1]) {
      if (!common_word)
        common_word = w;
      else if (*common_word != w)
        uniform = false;
    }
  }
  if (!any_active) return std::nullopt;
  const int distinct = used[0] + used[1] + used[2];
  if (distinct > 2) return std::nullopt;
  // Confined to one alternating cycle; uniform advancement makes it cyclic.
  if (common_word && uniform && !has_single) return Movement::Cyclic;
  return std::nullopt;
}

std::optional<FixedResult> detect_fixed(SystemState state, const Rule& rule, const Budget& budget) {
  FixedWatcher watcher;
  watcher.start(state);
  const std::int64_t limit = state.time + budget.max_steps;
  while (state.time < limit && state.graph.vertex_count() <= budget.max_vertices) {
    const StepReport rep = step(state, rule);
    if (auto r = watcher.observe(state, rep)) return r;
  }
  return std::nullopt;
}

std::optional<std::int64_t> detect_periodic_state(const Rule& rule, const SystemState& init,
                                                  const Budget& budget, int max_hash_vertices) {
  SystemState state = init;
  std::unordered_map<std::string, std::int64_t> seen;
  seen.emplace(canonical_form(state.graph, state.writer), state.time);
  const std::int64_t limit = init.time + budget.max_steps;
  while (state.time < limit) {
    step(state, rule);
    if (state.graph.vertex_count() > max_hash_vertices) return std::nullopt;
    auto [it, fresh] = seen.emplace(canonical_form(state.graph, state.writer), state.time);
    if (!fresh) return state.time - it->second;
  }
  return std::nullopt;
}

std::optional<RepetitiveResult> detect_repetitive(const Rule& rule, const SystemState& init,
                                                  const Budget& budget) {
  if (rule_uses(rule, RewriteKind::Shrink)) return std::nullopt;  // ids would shift
  SystemState state = init;
  std::vector<std::uint8_t> types;
  types.reserve(static_cast<std::size_t>(budget.max_steps));
  FixedWatcher watcher;
  watcher.start(state);
  std::int64_t next_checkpoint = 512;
  while (state.time - init.time < budget.max_steps &&
         state.graph.vertex_count() <= budget.max_vertices) {
    const StepReport rep = step(state, rule);
    types.push_back(static_cast<std::uint8_t>(rep.observed));
    if (watcher.observe(state, rep)) return std::nullopt;  // frozen: no growth
    const std::int64_t elapsed = state.time - init.time;
    if (elapsed == next_checkpoint || elapsed == budget.max_steps) {
      if (auto r = certify_from_history(rule, init, types, budget)) return r;
      next_checkpoint *= 4;
    }
  }
  return certify_from_history(rule, init, types, budget);
}

TrailStats trail_stats(const Rule& rule, const SystemState& init, const Budget& budget,
                       std::int64_t window) {
  SystemState state = init;
  std::vector<VertexId> writers{state.writer};
  std::vector<std::uint8_t> types;
  while (state.time - init.time < budget.max_steps &&
         state.graph.vertex_count() <= budget.max_vertices) {
    const StepReport rep = step(state, rule);
    writers.push_back(state.writer);
    types.push_back(static_cast<std::uint8_t>(rep.observed));
  }
  return stats_from_writers(rule, writers, types, window);
}

ClassLabel classify(const Rule& rule, const SystemState& init, const Budget& budget) {
  ClassLabel label;
  SystemState state = init;
  std::vector<VertexId> writers{state.writer};
  writers.reserve(static_cast<std::size_t>(std::min<std::int64_t>(budget.max_steps, 1 << 20)) + 1);
  std::vector<std::uint8_t> types;
  std::vector<int> vcounts{state.graph.vertex_count()};
  FixedWatcher watcher;
  watcher.start(state);

  std::optional<FixedResult> fixed;
  std::optional<RepetitiveResult> repetitive;
  std::int64_t next_checkpoint = 512;
  while (state.time - init.time < budget.max_steps &&
         state.graph.vertex_count() <= budget.max_vertices) {
    const StepReport rep = step(state, rule);
    writers.push_back(state.writer);
    types.push_back(static_cast<std::uint8_t>(rep.observed));
    vcounts.push_back(state.graph.vertex_count());
    label.anomalies += rep.multi_linked_noop;
    if ((fixed = watcher.observe(state, rep))) break;
    const std::int64_t elapsed = state.time - init.time;
    if (elapsed == next_checkpoint) {
      if ((repetitive = certify_from_history(rule, init, types, budget))) break;
      next_checkpoint *= 4;
    }
  }
  label.steps_used = state.time - init.time;
  label.final_vertices = state.graph.vertex_count();

  if (fixed) {
    label.kind = ClassLabel::Kind::Fixed;
    label.fixed = fixed;
    return label;
  }

  if (rule_uses(rule, RewriteKind::Shrink) || rule_uses(rule, RewriteKind::Exchange)) {
    if ((label.state_cycle = detect_periodic_state(rule, init, budget))) {
      label.kind = ClassLabel::Kind::Unresolved;  // periodic network, not a growth class
      return label;
    }
  }

  if (!repetitive) repetitive = certify_from_history(rule, init, types, budget);
  if (repetitive) {
    label.kind = ClassLabel::Kind::Repetitive;
    label.repetitive = repetitive;
    return label;
  }

  // Growth plus one-dimensional movement evidence makes it elaborate.
  const std::int64_t lookback =
      std::min<std::int64_t>(static_cast<std::int64_t>(vcounts.size()) - 1, 10'000);
  const bool growing =
      !vcounts.empty() &&
      vcounts.back() > vcounts[static_cast<std::size_t>(static_cast<std::int64_t>(vcounts.size()) -
                                                        1 - lookback)];
  const auto static_proof = detect_onedim(rule);
  const TrailStats st = stats_from_writers(rule, writers, types, 10'000);
  label.trail = st;
  if (growing && (static_proof.has_value() || st.confined)) {
    label.kind = ClassLabel::Kind::Elaborate;
    label.movement = movement_from(static_proof, st);
  } else {
    label.kind = ClassLabel::Kind::Unresolved;
  }
  return label;
}

}  // namespace trinet
