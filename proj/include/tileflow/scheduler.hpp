#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tileflow::sched {

struct Infrastructure {
    std::string id;
    double speed = 1.0;       // tiles per second at unit work
    double unit_price = 0.0;  // cost per second
    double bandwidth = 1.0;   // bytes per second
    double availability = 1.0;
};

// Linear compute + transfer execution-time model. Times are seconds,
// converted once to integer microseconds so planner and simulator agree
// exactly.
struct EtModel {
    double per_tile_compute = 1.0;  // seconds per tile at unit speed
    double transfer_bytes = 1.0;    // bytes moved per tile
    double src_time = 1.0;          // trusted-server split service, seconds
    double snk_time = 1.0;          // trusted-server aggregate service, seconds
};

struct Assignment {
    std::vector<int> infra_of_shard;  // shard index -> index into the infra list
};

struct PlanPoint {
    Assignment assignment;
    double f1 = 0;  // monetary cost
    double f2 = 0;  // makespan, seconds
};

struct ParetoFront {
    std::vector<PlanPoint> points;  // nondominated, sorted by f1 ascending
};

// Integer-microsecond cost of one tile on one infrastructure.
int64_t tile_cost_us(const EtModel& model, const Infrastructure& infra);
int64_t et_us(int shard_tiles, const EtModel& model, const Infrastructure& infra);

// Seconds; shard must be nonempty and the per-tile cost positive.
double estimate_et(int shard_tiles, const Infrastructure& infra, const EtModel& model);

double eval_cost(const Assignment& a, const std::vector<int>& shard_sizes,
                 const std::vector<Infrastructure>& infras, const EtModel& model);

// Shards co-located on one infrastructure serialize: the inner makespan term
// is max over infrastructures of the summed shard times.
int64_t makespan_inner_us(const Assignment& a, const std::vector<int>& shard_sizes,
                          const std::vector<Infrastructure>& infras, const EtModel& model);
double eval_makespan(const Assignment& a, const std::vector<int>& shard_sizes,
                     const std::vector<Infrastructure>& infras, const EtModel& model);

inline constexpr int64_t kDefaultEnumerationBudget = 1000000;

ParetoFront plan_exhaustive(const std::vector<int>& shard_sizes,
                            const std::vector<Infrastructure>& infras, const EtModel& model,
                            int64_t budget = kDefaultEnumerationBudget);

// NSGA-II style search over the shard->infrastructure vector; returns the
// nondominated set of every assignment evaluated. Deterministic for a seed.
ParetoFront plan_heuristic(const std::vector<int>& shard_sizes,
                           const std::vector<Infrastructure>& infras, const EtModel& model,
                           uint64_t seed, int generations, int population);

enum class Preference { MinCost, MinMakespan, Knee };
const char* preference_name(Preference p);
Preference preference_from_name(const std::string& name);

PlanPoint select_plan(const ParetoFront& front, Preference pref);

// 2-D hypervolume (minimization) against reference point (ref_f1, ref_f2).
double hypervolume2(const std::vector<PlanPoint>& points, double ref_f1, double ref_f2);

}  // namespace tileflow::sched
