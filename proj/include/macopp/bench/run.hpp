#pragma once

#include <optional>
#include <string>

#include "macopp/bench/config.hpp"
#include "macopp/bench/oracle.hpp"
#include "macopp/mcts/joint_plan.hpp"

namespace macopp::bench {

enum class RunStatus { Feasible, NoAssistance };

std::string to_string(RunStatus status);

// Process exit code for a completed run: 0 feasible, 2 no assistance.
int exit_code(RunStatus status);

struct RunMetrics {
    std::string problem;
    Rational alpha;
    std::optional<Rational> solo_cost;         // nullopt: the human has no solo plan
    std::optional<Rational> joint_human_cost;  // suffix cost
    std::optional<Rational> percent_decrease;  // 100·(solo − joint)/solo
    std::optional<int> joint_length;           // |prefix| + |suffix|
    std::optional<int> k;
    int iterations = 0;  // m as configured
    double wall_time = 0.0;  // tree build + extraction, seconds
    std::optional<Rational> objective;
    bool feasible = false;
};

struct RunResult {
    RunStatus status = RunStatus::NoAssistance;
    RunMetrics metrics;
    std::optional<mcts::JointPlan> plan;
    mcts::TreeStats stats;
    std::size_t initial_belief_size = 0;
    std::size_t plan_cache_entries = 0;
    std::optional<OracleResult> oracle;
    std::string tree_dump;  // JSON, filled when requested
};

struct RunOptions {
    std::string name;
    SearchConfig search;
    conformant::PlannerOptions planner;
    bool oracle = false;
    std::optional<int> oracle_depth;
    bool dump_tree = false;
};

// Solo baseline from B_0; nullopt when the human has no plan at all.
// Throws ResourceLimit when the planner's node budget runs out.
std::optional<Rational> solo_baseline(const MaCoppProblem& problem, conformant::PlanCache& cache);

RunResult run(const MaCoppProblem& problem, const RunOptions& options);

// Loads the files named in `config`, then runs. Writes the tree dump if requested.
RunResult run(const RunConfig& config, MaCoppProblem* loaded = nullptr);

}  // namespace macopp::bench
