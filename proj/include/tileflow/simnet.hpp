#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tileflow/detectors.hpp"
#include "tileflow/privacy.hpp"
#include "tileflow/scheduler.hpp"

namespace tileflow::sim {

using detect::DetectionOutput;

enum class Rebalance { None, Steal };

struct WorldConfig {
    uint64_t seed = 0;  // recorded for reproducibility; the engine itself is deterministic
    std::map<std::string, double> straggler;   // infra id -> slowdown factor >= 1
    std::map<std::string, double> failure_at;  // infra id -> crash-stop time, seconds
    Rebalance rebalance = Rebalance::None;
    int steal_granularity = 1;  // tiles per steal
};

enum class EventKind : int {
    Dispatch = 0,
    TileDone = 1,
    Steal = 2,
    NodeFail = 3,
    ShardDone = 4,
    AllDone = 5,
};
const char* kind_name(EventKind k);

struct TraceEvent {
    int64_t t_us = 0;
    EventKind kind = EventKind::Dispatch;
    std::string node;  // empty for all-done
    int tile = -1;     // encoded id; shard index for dispatch/shard-done
};

struct ExecutionTrace {
    std::vector<TraceEvent> events;  // sorted by (t, kind rank, node, tile)
    int64_t completion_us = 0;
    std::map<std::string, int64_t> busy_us;
};

struct SimResult {
    ExecutionTrace trace;
    std::vector<DetectionOutput> outputs;  // sorted by encoded id
};

// Deterministic discrete-event execution of a plan over the partitions.
// Fault-free completion equals makespan_inner_us exactly.
SimResult simulate(const sched::PlanPoint& plan,
                   const std::vector<privacy::EncodedPartition>& partitions,
                   const std::vector<sched::Infrastructure>& infras, const sched::EtModel& model,
                   const WorldConfig& world, const detect::DetectorSet& detectors);

struct ReplaySummary {
    int64_t completion_us = 0;
    std::map<std::string, double> utilization;  // busy / completion per node
    double tiles_per_second = 0;
    long steals = 0;
};

// Validates trace shape (ordering, unique tile completions) and summarizes.
ReplaySummary replay(const ExecutionTrace& trace);

// --- files ------------------------------------------------------------------
std::string trace_to_jsonl(const ExecutionTrace& trace);
ExecutionTrace trace_from_jsonl(const std::string& text);
std::string summary_to_json(const ReplaySummary& s);

std::string outputs_to_json(const std::vector<DetectionOutput>& outputs);
std::vector<DetectionOutput> outputs_from_json(const std::string& text);

}  // namespace tileflow::sim
