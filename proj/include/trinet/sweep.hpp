#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "trinet/classify.hpp"
#include "trinet/rule.hpp"
#include "trinet/system.hpp"

namespace trinet {

struct RuleRecord {
  RuleId rule_id = 0;
  std::string rule_text;
  std::string init;
  ClassLabel label;
};

// One line of versioned JSON with a stable key order, so concatenated record
// files diff and resume cleanly.
std::string record_to_json(const RuleRecord& rec);

struct SweepSummary {
  int total = 0;
  int fixed = 0, repetitive = 0, elaborate = 0, unresolved = 0;
  int green_halt = 0;
  int anomaly_halt = 0;
  int dynamic_writer = 0;
  std::map<int, int> writer_periods;      // dynamic-writer orbit lengths
  std::map<int, int> repetitive_periods;  // certified period histogram
  int cyclic = 0, bouncing = 0, movement_unknown = 0;
  std::int64_t max_transient = 0;
  int max_period = 0;
  // transient >= 40 or period >= 12: the slow settlers
  std::vector<RuleId> long_transient_rules;
  int max_static_vertices = 0;
  RuleId max_static_rule = -1;
  std::int64_t max_static_settle = -1;
  std::int64_t longest_settle = -1;
  RuleId longest_settle_rule = -1;
  int longest_settle_vertices = 0;
  std::int64_t total_anomalies = 0;

  void add(const RuleRecord& rec);
  std::string to_json() const;
};

struct SweepOptions {
  int threads = 0;   // 0: TRINET_THREADS env, else hardware concurrency
  RuleId first = 0;  // resume point: ids below are assumed already emitted
  std::function<void(int done, int total)> progress;
};

// Sink receives records in RuleId order regardless of worker interleaving.
using RecordSink = std::function<void(const RuleRecord&)>;

SweepSummary sweep(const OptionTable& table, const SystemState& init, const std::string& init_name,
                   const Budget& budget, const RecordSink& sink, const SweepOptions& opts = {});

int resolve_thread_count(int requested);

}  // namespace trinet
