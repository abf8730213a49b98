#include "macopp/bench/oracle.hpp"

#include <string>

#include "macopp/core/errors.hpp"
#include "macopp/core/transition.hpp"

namespace macopp::bench {

namespace {

struct Enumerator {
    const MaCoppProblem& problem;
    const SearchConfig& config;
    int max_depth;
    std::optional<Rational> solo;
    conformant::PlanCache& cache;
    std::size_t cap;

    OracleResult best;
    std::vector<std::string> best_labels;
    std::vector<std::size_t> path;
    std::vector<std::string> labels;

    void visit(const WorldState& state, const Belief& belief, int observable) {
        if (++best.enumerated > cap)
            throw ResourceLimit("prefix enumeration exceeded " + std::to_string(cap) + " nodes");
        int depth = static_cast<int>(path.size());
        int k = config.count_observable_only ? observable : depth;
        consider(belief, k);
        if (depth >= max_depth || depth + 1 >= config.budget) return;
        for (std::size_t i = 0; i < problem.robot_actions.size(); ++i) {
            const GroundAction& a = problem.robot_actions[i];
            if (!applicable(state, a.body)) continue;
            WorldState next = apply(state, a);
            ObservationId obs = observe(a, next, problem.sensor);
            Belief b = belief_update(belief, problem.robot_actions, obs, problem.sensor);
            path.push_back(i);
            labels.push_back(a.label());
            visit(next, b, observable + (problem.sensor.is_null(obs) ? 0 : 1));
            path.pop_back();
            labels.pop_back();
        }
    }

    void consider(const Belief& belief, int k) {
        if (k >= config.budget) return;
        conformant::PlanResult r = cache.lookup(belief);
        if (r.status == conformant::PlanStatus::BudgetExhausted)
            throw ResourceLimit("conformant planner node budget exhausted during enumeration");
        if (!r.found()) return;
        const Rational& cost = r.plan->cost;
        if (solo && !(cost < *solo)) return;
        Rational objective = config.alpha * Rational(k) + (Rational(1) - config.alpha) * cost;
        if (best.objective) {
            if (objective > *best.objective) return;
            if (objective == *best.objective && !(labels < best_labels)) return;
        }
        best.objective = objective;
        best.prefix = path;
        best.k = k;
        best.suffix_cost = cost;
        best_labels = labels;
    }
};

}  // namespace

OracleResult brute_force_oracle(const MaCoppProblem& problem, const SearchConfig& config, int max_depth,
                                std::optional<Rational> solo_cost, conformant::PlanCache& cache, std::size_t cap) {
    Enumerator e{problem, config, max_depth, solo_cost, cache, cap, {}, {}, {}, {}};
    e.visit(problem.initial_state, problem.initial_belief, 0);
    return e.best;
}

}  // namespace macopp::bench
