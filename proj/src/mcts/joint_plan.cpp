#include "macopp/mcts/joint_plan.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "macopp/core/transition.hpp"

namespace macopp::mcts {

Rational objective_value(const Rational& alpha, int k, const Rational& suffix_cost) {
    return alpha * Rational(k) + (Rational(1) - alpha) * suffix_cost;
}

std::vector<NodeId> restricted_nodes(const UtilityTree& tree, int n_best) {
    std::vector<NodeId> kept;
    std::deque<NodeId> queue{tree.root()};
    while (!queue.empty()) {
        NodeId id = queue.front();
        queue.pop_front();
        kept.push_back(id);
        std::vector<NodeId> children;
        for (NodeId c : tree.node(id).children)
            if (tree.node(c).sim) children.push_back(c);
        std::sort(children.begin(), children.end(), [&](NodeId a, NodeId b) {
            const auto& na = tree.node(a);
            const auto& nb = tree.node(b);
            if (na.utility != nb.utility) return na.utility > nb.utility;
            if (na.visits != nb.visits) return na.visits > nb.visits;
            return *na.action < *nb.action;
        });
        if (children.size() > static_cast<std::size_t>(n_best)) children.resize(static_cast<std::size_t>(n_best));
        queue.insert(queue.end(), children.begin(), children.end());
    }
    return kept;
}

JointPlan joint_plan_at(const UtilityTree& tree, NodeId id) {
    const auto& n = tree.node(id);
    JointPlan plan;
    plan.node = id;
    for (std::optional<NodeId> cur = id; cur && tree.node(*cur).action; cur = tree.node(*cur).parent) {
        const auto& step = tree.node(*cur);
        plan.robot_prefix.push_back({*step.action, step.observation, step.belief.size()});
    }
    std::reverse(plan.robot_prefix.begin(), plan.robot_prefix.end());
    plan.human_suffix = n.sim && n.sim->plan ? *n.sim->plan : conformant::ConformantPlan{};
    plan.k = tree.k_of(id);
    plan.total_steps = static_cast<int>(plan.robot_prefix.size() + plan.human_suffix.steps.size());
    plan.solo_cost = tree.solo_cost();
    plan.suffix_cost = plan.human_suffix.cost;
    if (plan.solo_cost) plan.cost_differential = plan.suffix_cost - *plan.solo_cost;
    plan.objective = objective_value(tree.config().alpha, plan.k, plan.suffix_cost);
    return plan;
}

namespace {

std::vector<std::string> labels(const UtilityTree& tree, NodeId id) {
    std::vector<std::string> out;
    for (std::size_t a : tree.path_actions(id)) out.push_back(tree.problem().robot_actions[a].label());
    return out;
}

}  // namespace

std::optional<JointPlan> extract_joint_plan(const UtilityTree& tree) {
    std::optional<NodeId> best;
    std::optional<Rational> best_objective;
    std::vector<std::string> best_labels;
    for (NodeId id : restricted_nodes(tree, tree.config().n_best)) {
        const auto& n = tree.node(id);
        if (!n.sim || !n.sim->success) continue;
        if (tree.k_of(id) >= tree.config().budget) continue;
        Rational objective = *n.sim->objective;
        if (best_objective && objective > *best_objective) continue;
        std::vector<std::string> path = labels(tree, id);
        if (best_objective && objective == *best_objective && !(path < best_labels)) continue;
        best = id;
        best_objective = objective;
        best_labels = std::move(path);
    }
    if (!best) return std::nullopt;
    return joint_plan_at(tree, *best);
}

ConstraintCheck check_constraints(const JointPlan& plan, const MaCoppProblem& problem, int budget,
                                  const conformant::PlannerOptions& options) {
    ConstraintCheck check;
    // Replay the prefix to recover B_k without trusting the tree.
    WorldState state = problem.initial_state;
    Belief belief = problem.initial_belief;
    for (const auto& step : plan.robot_prefix) {
        const GroundAction& a = problem.robot_actions[step.action];
        state = apply(state, a);
        belief = belief_update(belief, problem.robot_actions, observe(a, state, problem.sensor), problem.sensor);
    }
    Rational suffix = conformant::plan_cost(plan.human_suffix.steps, problem.human_actions);

    auto solo = conformant::conformant_plan(problem.initial_belief, problem.human_goal, problem.human_actions, options);
    check.cost_differential_negative = !solo.found() || suffix - solo.plan->cost < Rational(0);

    auto from_bk = conformant::conformant_plan(belief, problem.human_goal, problem.human_actions, options);
    check.suffix_is_optimal =
        from_bk.found() && from_bk.plan->cost == suffix &&
        conformant::validate_plan(plan.human_suffix, belief, problem.human_goal, problem.human_actions);

    check.within_budget = plan.k < budget && static_cast<int>(plan.robot_prefix.size()) <= budget;
    return check;
}

}  // namespace macopp::mcts
