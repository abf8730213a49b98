#include "macopp/bench/run.hpp"

#include <chrono>
#include <fstream>

#include "macopp/bench/report.hpp"
#include "macopp/core/errors.hpp"

namespace macopp::bench {

std::string to_string(RunStatus status) {
    return status == RunStatus::Feasible ? "feasible" : "no-assistance";
}

int exit_code(RunStatus status) { return status == RunStatus::Feasible ? 0 : 2; }

std::optional<Rational> solo_baseline(const MaCoppProblem& problem, conformant::PlanCache& cache) {
    conformant::PlanResult r = cache.lookup(problem.initial_belief);
    if (r.status == conformant::PlanStatus::BudgetExhausted)
        throw ResourceLimit("conformant planner node budget exhausted computing the solo baseline");
    if (!r.found()) return std::nullopt;
    return r.plan->cost;
}

RunResult run(const MaCoppProblem& problem, const RunOptions& options) {
    options.search.validate();
    conformant::PlanCache cache(problem.human_goal, problem.human_actions, options.planner);

    RunResult result;
    result.initial_belief_size = problem.initial_belief.size();
    RunMetrics& m = result.metrics;
    m.problem = options.name.empty() ? problem.name : options.name;
    m.alpha = options.search.alpha;
    m.iterations = options.search.iterations;
    m.solo_cost = solo_baseline(problem, cache);

    auto start = std::chrono::steady_clock::now();
    mcts::UtilityTree tree(problem, options.search, m.solo_cost, cache);
    tree.build();
    result.plan = mcts::extract_joint_plan(tree);
    m.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    result.stats = tree.stats();
    if (result.plan) {
        const mcts::JointPlan& p = *result.plan;
        result.status = RunStatus::Feasible;
        m.feasible = true;
        m.joint_human_cost = p.suffix_cost;
        m.joint_length = p.total_steps;
        m.k = p.k;
        m.objective = p.objective;
        if (m.solo_cost && *m.solo_cost != Rational(0))
            m.percent_decrease = Rational(100) * (*m.solo_cost - p.suffix_cost) / *m.solo_cost;
    }
    if (options.oracle) {
        int depth = options.oracle_depth.value_or(options.search.budget - 1);
        result.oracle = brute_force_oracle(problem, options.search, depth, m.solo_cost, cache);
    }
    if (options.dump_tree) result.tree_dump = render_json(tree_to_json(tree));
    result.plan_cache_entries = cache.size();
    return result;
}

RunResult run(const RunConfig& config, MaCoppProblem* loaded) {
    MaCoppProblem problem = pddl::load_problem(config.paths, config.load);
    RunOptions options{.name = config.name,
                       .search = config.search,
                       .planner = config.planner,
                       .oracle = config.oracle,
                       .oracle_depth = config.oracle_depth,
                       .dump_tree = config.dump_tree.has_value()};
    RunResult result = run(problem, options);
    if (config.dump_tree) {
        std::ofstream out(*config.dump_tree, std::ios::binary);
        if (!out) throw Error("cannot write tree dump to " + config.dump_tree->string());
        out << result.tree_dump;
    }
    if (loaded) *loaded = std::move(problem);
    return result;
}

}  // namespace macopp::bench
