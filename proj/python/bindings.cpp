#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "trinet/analysis.hpp"
#include "trinet/catalog.hpp"
#include "trinet/classify.hpp"
#include "trinet/io.hpp"
#include "trinet/iso.hpp"
#include "trinet/sweep.hpp"
#include "trinet/worddyn.hpp"

namespace py = pybind11;
using namespace trinet;

namespace {

Surroundings surroundings_from_string(const std::string& s) {
  Surroundings out;
  if (s.size() != 1 || !surroundings_from_char(s[0], out))
    throw py::value_error("surroundings must be one of '0', 'r', 'b', 'g'");
  return out;
}

py::dict label_to_dict(const ClassLabel& l) {
  py::dict d;
  d["label"] = kind_name(l.kind);
  d["steps_used"] = l.steps_used;
  d["final_vertices"] = l.final_vertices;
  d["anomalies"] = l.anomalies;
  if (l.fixed) {
    d["halted"] = l.fixed->halted;
    d["writer_period"] = l.fixed->writer_period;
    d["transient"] = l.fixed->settle_time;
    d["green_halt"] = l.fixed->green_halt;
  }
  if (l.repetitive) {
    d["transient"] = l.repetitive->transient;
    d["period"] = l.repetitive->period;
    d["certificate_radius"] = l.repetitive->radius;
  }
  if (l.kind == ClassLabel::Kind::Elaborate) d["movement"] = movement_name(l.movement);
  if (l.state_cycle) d["state_cycle"] = *l.state_cycle;
  return d;
}

py::dict report_to_dict(const CheckReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["range"] = r.range;
  d["pass"] = r.pass;
  d["counterexample"] = r.counterexample;
  return d;
}

}  // namespace

PYBIND11_MODULE(_trinetca, m) {
  m.doc() = "colored trinet automata: graph rewriting engine and verifiers";

  py::class_<ColoredTrinet>(m, "ColoredTrinet")
      .def(py::init<>())
      .def_property_readonly("vertex_count", &ColoredTrinet::vertex_count)
      .def("neighbor",
           [](const ColoredTrinet& g, VertexId v, const std::string& c) {
             Color col;
             if (c.size() != 1 || !color_from_char(c[0], col))
               throw py::value_error("color must be 'r', 'b' or 'g'");
             return g.neighbor(v, col);
           })
      .def("walk",
           [](const ColoredTrinet& g, VertexId v, const std::string& word) {
             MoveWord w;
             for (char ch : word) {
               Color c;
               if (!color_from_char(ch, c)) throw py::value_error("bad color letter");
               w.push_back(c);
             }
             return g.walk(v, w);
           })
      .def("surroundings",
           [](const ColoredTrinet& g, VertexId v) -> py::object {
             auto s = g.surroundings(v);
             if (!s) return py::none();
             return py::str(std::string(1, surroundings_char(*s)));
           })
      .def("expand",
           [](ColoredTrinet& g, VertexId p) {
             auto ex = g.expand(p);
             return py::make_tuple(ex.red_vertex, ex.green_vertex, ex.blue_vertex);
           })
      .def("check_invariants",
           [](const ColoredTrinet& g) -> py::object {
             auto why = g.invariant_violation();
             if (!why) return py::none();
             return py::str(*why);
           })
      .def("to_text",
           [](const ColoredTrinet& g) {
             std::ostringstream out;
             write_trinet(out, g);
             return out.str();
           })
      .def("__eq__", [](const ColoredTrinet& a, const ColoredTrinet& b) { return a == b; });

  py::class_<SystemState>(m, "SystemState")
      .def(py::init<>())
      .def_readwrite("graph", &SystemState::graph)
      .def_readwrite("writer", &SystemState::writer)
      .def_readwrite("time", &SystemState::time);

  py::class_<Rule>(m, "Rule")
      .def(py::init<>())
      .def("__str__", [](const Rule& r) { return format_rule(r); })
      .def("__eq__", [](const Rule& a, const Rule& b) { return a == b; })
      .def("conjugate", [](const Rule& r) { return conjugate_rule(r); })
      .def_property_readonly("canonical_shape", [](const Rule& r) { return is_canonical_shape(r); });

  m.def("make_cube", &make_cube);
  m.def("make_k33", &make_k33);
  m.def("cube_state", &cube_state);
  m.def("k33_state", &k33_state);
  m.def("parse_rule", [](const std::string& text) { return parse_rule(text); });
  m.def("format_rule", &format_rule);
  m.def("rule_from_id",
        [](int id) { return rule_from_id(id, OptionTable::fallback()); });
  m.def("rule_to_id", [](const Rule& r) -> py::object {
    auto id = rule_to_id(r, OptionTable::fallback());
    if (!id) return py::none();
    return py::int_(*id);
  });
  m.def("rule_count", []() { return OptionTable::fallback().rule_count(); });

  m.def("step", [](SystemState& state, const Rule& rule) {
    const StepReport rep = step(state, rule);
    py::dict d;
    d["observed"] = std::string(1, surroundings_char(rep.observed));
    d["vertex_delta"] = rep.vertex_delta;
    d["graph_changed"] = rep.graph_changed;
    d["writer_moved"] = rep.writer_moved;
    d["multi_linked_noop"] = rep.multi_linked_noop;
    return d;
  });
  m.def(
      "simulate",
      [](const Rule& rule, SystemState state, std::int64_t steps) {
        for (std::int64_t i = 0; i < steps; ++i) step(state, rule);
        return state;
      },
      py::arg("rule"), py::arg("state"), py::arg("steps"));

  m.def("rooted_iso", &rooted_iso);
  m.def("unrooted_iso", &unrooted_iso);
  m.def("canonical_form",
        [](const ColoredTrinet& g, VertexId root) { return py::bytes(canonical_form(g, root)); });

  m.def(
      "classify",
      [](const Rule& rule, const SystemState& init, std::int64_t max_steps) {
        Budget budget;
        budget.max_steps = max_steps;
        return label_to_dict(classify(rule, init, budget));
      },
      py::arg("rule"), py::arg("init"), py::arg("max_steps") = 200'000);

  m.def("vertex_count_series", [](const Rule& rule, const SystemState& init, std::int64_t t) {
    std::vector<std::int64_t> out;
    for (const auto& [time, v] : vertex_count_series(rule, init, t).points)
      out.push_back(static_cast<std::int64_t>(v));
    return out;
  });
  m.def("diameter", [](const ColoredTrinet& g) { return diameter(g); });
  m.def("shell_sizes", [](const ColoredTrinet& g, VertexId v) { return shell_sizes(g, v); });
  m.def("shell_dimension", [](const ColoredTrinet& g, VertexId v) { return shell_dimension(g, v); });
  m.def(
      "gromov_delta",
      [](const ColoredTrinet& g, bool single_path, int max_vertices) {
        return gromov_delta(g, single_path ? GeodesicVariant::SinglePath : GeodesicVariant::FullSets,
                            max_vertices);
      },
      py::arg("graph"), py::arg("single_path") = false, py::arg("max_vertices") = 2000);
  m.def("scaled_hyperbolic", [](const ColoredTrinet& g) {
    const HyperbolicityReport rep = scaled_hyperbolic(g);
    py::dict d;
    d["delta"] = rep.delta;
    d["delta_single_path"] = rep.delta_single_path;
    d["diameter"] = rep.diameter;
    d["ratio"] = py::make_tuple(rep.ratio.first, rep.ratio.second);
    d["scaled_hyperbolic"] = rep.scaled_hyperbolic;
    return d;
  });

  // catalog
  m.def("cyclic_doubling_rule", &cyclic_doubling_rule);
  m.def("golden_growth_rule", &golden_growth_rule);
  m.def("ladder_growth_rule", &ladder_growth_rule);
  m.def("halting_example_rule", &halting_example_rule);

  // verifiers
  m.def("theorem1_check", [](int n) { return report_to_dict(theorem1_check(n)); });
  m.def("theorem2_check", [](std::int64_t t) { return report_to_dict(theorem2_check(t)); });
  m.def("hstate_check", [](std::int64_t t) { return report_to_dict(hstate_check(t)); });
  m.def("lemma1_check", [](int t) { return report_to_dict(lemma1_check(t)); });
  m.def("lemma6_check", [](std::int64_t i) { return report_to_dict(lemma6_check(i)); });
  m.def("theorem2_count", &theorem2_count);
  m.def("floor_phi", &floor_phi);
  m.def("jseq", &jseq);
  m.def("simultaneous_replace", [](const ColoredTrinet& g, const std::string& types) {
    return simultaneous_replace(g, [&types](Surroundings s) {
      return types.find(surroundings_char(s)) != std::string::npos;
    });
  });
  m.def("hstate", &hstate);
}
