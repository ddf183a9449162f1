#include "trinet/sweep.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

#include <json.hpp>

namespace trinet {

using ordered_json = nlohmann::ordered_json;

std::string record_to_json(const RuleRecord& rec) {
  const ClassLabel& l = rec.label;
  ordered_json j;
  j["schema"] = "trinet-sweep-v1";
  j["rule_id"] = rec.rule_id;
  j["rule_text"] = rec.rule_text;
  j["init"] = rec.init;
  j["label"] = kind_name(l.kind);
  if (l.fixed) {
    j["halted"] = l.fixed->halted;
    j["writer_period"] = l.fixed->writer_period;
    j["transient"] = l.fixed->settle_time;
    j["period"] = nullptr;
    j["green_halt"] = l.fixed->green_halt;
  } else if (l.repetitive) {
    j["halted"] = false;
    j["writer_period"] = nullptr;
    j["transient"] = l.repetitive->transient;
    j["period"] = l.repetitive->period;
    j["green_halt"] = false;
  } else {
    j["halted"] = nullptr;
    j["writer_period"] = nullptr;
    j["transient"] = nullptr;
    j["period"] = nullptr;
    j["green_halt"] = false;
  }
  j["certificate_radius"] = l.repetitive ? ordered_json(l.repetitive->radius) : ordered_json(nullptr);
  j["movement"] =
      l.kind == ClassLabel::Kind::Elaborate ? ordered_json(movement_name(l.movement)) : ordered_json(nullptr);
  j["state_cycle"] = l.state_cycle ? ordered_json(*l.state_cycle) : ordered_json(nullptr);
  j["final_vertices"] = l.final_vertices;
  j["steps_used"] = l.steps_used;
  j["anomalies"] = l.anomalies;
  return j.dump();
}

void SweepSummary::add(const RuleRecord& rec) {
  const ClassLabel& l = rec.label;
  ++total;
  total_anomalies += l.anomalies;
  switch (l.kind) {
    case ClassLabel::Kind::Fixed: {
      ++fixed;
      const FixedResult& f = *l.fixed;
      green_halt += f.green_halt;
      anomaly_halt += f.anomaly_halt;
      if (!f.halted) {
        ++dynamic_writer;
        ++writer_periods[f.writer_period];
      }
      if (f.final_vertices > max_static_vertices ||
          (f.final_vertices == max_static_vertices && rec.rule_id < max_static_rule)) {
        max_static_vertices = f.final_vertices;
        max_static_rule = rec.rule_id;
        max_static_settle = f.settle_time;
      }
      if (f.settle_time > longest_settle) {
        longest_settle = f.settle_time;
        longest_settle_rule = rec.rule_id;
        longest_settle_vertices = f.final_vertices;
      }
      break;
    }
    case ClassLabel::Kind::Repetitive: {
      ++repetitive;
      const RepetitiveResult& r = *l.repetitive;
      ++repetitive_periods[r.period];
      max_transient = std::max(max_transient, r.transient);
      max_period = std::max(max_period, r.period);
      if (r.transient >= 40 || r.period >= 12) long_transient_rules.push_back(rec.rule_id);
      break;
    }
    case ClassLabel::Kind::Elaborate:
      ++elaborate;
      cyclic += l.movement == Movement::Cyclic;
      bouncing += l.movement == Movement::Bouncing;
      movement_unknown += l.movement == Movement::Unknown;
      break;
    case ClassLabel::Kind::Unresolved:
      ++unresolved;
      break;
  }
}

std::string SweepSummary::to_json() const {
  ordered_json j;
  j["schema"] = "trinet-sweep-summary-v1";
  j["total"] = total;
  j["fixed"] = fixed;
  j["repetitive"] = repetitive;
  j["elaborate"] = elaborate;
  j["unresolved"] = unresolved;
  j["green_halt"] = green_halt;
  j["anomaly_halt"] = anomaly_halt;
  j["dynamic_writer"] = dynamic_writer;
  ordered_json wp = ordered_json::object();
  for (const auto& [p, c] : writer_periods) wp[std::to_string(p)] = c;
  j["writer_period_histogram"] = wp;
  ordered_json rp = ordered_json::object();
  for (const auto& [p, c] : repetitive_periods) rp[std::to_string(p)] = c;
  j["repetitive_period_histogram"] = rp;
  j["cyclic"] = cyclic;
  j["bouncing"] = bouncing;
  j["movement_unknown"] = movement_unknown;
  j["max_transient"] = max_transient;
  j["max_period"] = max_period;
  j["long_transient_rules"] = long_transient_rules;
  j["max_static_vertices"] = max_static_vertices;
  j["max_static_rule"] = max_static_rule;
  j["max_static_settle"] = max_static_settle;
  j["longest_settle"] = longest_settle;
  j["longest_settle_rule"] = longest_settle_rule;
  j["longest_settle_vertices"] = longest_settle_vertices;
  j["total_anomalies"] = total_anomalies;
  return j.dump(2);
}

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TRINET_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

SweepSummary sweep(const OptionTable& table, const SystemState& init, const std::string& init_name,
                   const Budget& budget, const RecordSink& sink, const SweepOptions& opts) {
  table.validate();
  const int total = table.rule_count();
  const int threads = resolve_thread_count(opts.threads);

  SweepSummary summary;
  std::mutex emit_mutex;
  std::condition_variable emit_cv;
  std::map<RuleId, RuleRecord> pending;
  RuleId next_emit = opts.first;
  std::atomic<RuleId> next_claim{opts.first};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      const RuleId id = next_claim.fetch_add(1);
      if (id >= total || failed.load()) return;
      try {
        RuleRecord rec;
        rec.rule_id = id;
        const Rule rule = rule_from_id(id, table);
        rec.rule_text = format_rule(rule);
        rec.init = init_name;
        rec.label = classify(rule, init, budget);
        std::unique_lock<std::mutex> lock(emit_mutex);
        pending.emplace(id, std::move(rec));
        while (!pending.empty() && pending.begin()->first == next_emit) {
          RuleRecord out = std::move(pending.begin()->second);
          pending.erase(pending.begin());
          ++next_emit;
          summary.add(out);
          if (sink) sink(out);  // under the lock: appends stay ordered
          if (opts.progress) opts.progress(next_emit, total);
        }
        emit_cv.notify_all();
        // Bound the reorder buffer so a slow rule cannot pile up memory.
        emit_cv.wait(lock, [&] { return pending.size() < 256 || failed.load(); });
      } catch (...) {
        std::lock_guard<std::mutex> g(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
        emit_cv.notify_all();
        return;
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return summary;
}

}  // namespace trinet
