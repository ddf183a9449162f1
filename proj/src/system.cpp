#include "trinet/system.hpp"

#include "trinet/errors.hpp"

namespace trinet {

StepReport step(SystemState& state, const Rule& rule) {
  StepReport rep;
  const auto s = state.graph.surroundings(state.writer);
  if (!s) {
    rep.multi_linked_noop = true;
    ++state.time;
    return rep;
  }
  rep.observed = *s;

  const Action& act = rule.action(*s);
  rep.rewrite = act.rewrite;
  const VertexId p = state.writer;
  const VertexId dest = state.graph.walk(p, act.move);

  switch (act.rewrite) {
    case RewriteKind::Keep:
      state.writer = dest;
      break;

    case RewriteKind::Expand: {
      const auto ex = state.graph.expand(p);
      if (dest != p) {
        state.writer = dest;
      } else if (act.move.empty()) {
        state.writer = ex.red_vertex;  // no arriving edge; take the index heir
      } else {
        // The walk's final hop arrived at p along some color; that external
        // edge now ends on the triangle vertex of the same color, so the
        // writer continues there. Keeps the step red/blue-equivariant.
        switch (act.move.back()) {
          case Color::Red: state.writer = ex.red_vertex; break;
          case Color::Blue: state.writer = ex.blue_vertex; break;
          case Color::Green: state.writer = ex.green_vertex; break;
        }
      }
      rep.vertex_delta = 2;
      rep.graph_changed = true;
      break;
    }

    case RewriteKind::Shrink: {
      try {
        const auto sh = state.graph.shrink(p);
        const VertexId mapped = sh.remap[static_cast<std::size_t>(dest)];
        state.writer = (mapped == kNoVertex) ? sh.merged : mapped;
        rep.vertex_delta = -2;
        rep.graph_changed = true;
      } catch (const NotATriangle& e) {
        rep.anomaly = e.what();
      } catch (const DegenerateExternal& e) {
        rep.anomaly = e.what();
      }
      break;
    }

    case RewriteKind::Exchange: {
      if (act.exchange_edges.size() != 2) {
        rep.anomaly = "exchange action without two edge selectors";
        break;
      }
      const auto& s1 = act.exchange_edges[0];
      const auto& s2 = act.exchange_edges[1];
      if (s1.color != s2.color) {
        rep.anomaly = "exchange selectors name edges of different colors";
        break;
      }
      const VertexId a = state.graph.walk(p, s1.path);
      const VertexId x = state.graph.walk(p, s2.path);
      try {
        state.graph.exchange(a, x, s1.color);
        state.writer = dest;
        rep.graph_changed = true;
      } catch (const SameEdge& e) {
        rep.anomaly = e.what();
      } catch (const WouldSelfLoop& e) {
        rep.anomaly = e.what();
      }
      break;
    }
  }

  if (!rep.anomaly) rep.writer_moved = state.writer != p;
  ++state.time;
  return rep;
}

void run(SystemState& state, const Rule& rule, std::int64_t steps, const StepObserver& observer) {
  for (std::int64_t i = 0; i < steps; ++i) {
    StepReport rep = step(state, rule);
    if (observer && !observer(state, rep)) return;
  }
}

}  // namespace trinet
