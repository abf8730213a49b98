#pragma once

#include <optional>
#include <vector>

#include "macopp/mcts/utility_tree.hpp"

namespace macopp::mcts {

struct PrefixStep {
    std::size_t action;           // index into robot_actions
    ObservationId observation;    // symbol the human received
    std::size_t belief_size = 0;  // |B_t| after the step
};

// Robot prefix of length k followed by the human's conformant suffix from B_k.
struct JointPlan {
    std::vector<PrefixStep> robot_prefix;
    conformant::ConformantPlan human_suffix;
    int k = 0;            // as counted in the objective
    int total_steps = 0;  // |prefix| + |suffix|
    std::optional<Rational> solo_cost;
    Rational suffix_cost;
    std::optional<Rational> cost_differential;  // suffix − solo; nullopt when no solo plan exists
    Rational objective;
    NodeId node = 0;
};

// α·k + (1−α)·C_H(suffix)
Rational objective_value(const Rational& alpha, int k, const Rational& suffix_cost);

// Nodes kept by the n-best restriction: the root plus, recursively, the n
// simulated children of every kept node with the highest utility (ties: more
// visits, then lower action index).
std::vector<NodeId> restricted_nodes(const UtilityTree& tree, int n_best);

// Among restricted nodes that satisfy the cost-differential, recognizability and
// budget constraints, the one minimizing the objective; ties go to the
// lexicographically smaller action-label sequence. nullopt when none is feasible.
std::optional<JointPlan> extract_joint_plan(const UtilityTree& tree);

// Rebuilds the joint plan for one node (used by extraction and tests).
JointPlan joint_plan_at(const UtilityTree& tree, NodeId id);

// The three constraints on a returned plan, checked independently of the search.
struct ConstraintCheck {
    bool cost_differential_negative = false;
    bool suffix_is_optimal = false;
    bool within_budget = false;

    bool all() const { return cost_differential_negative && suffix_is_optimal && within_budget; }
};

ConstraintCheck check_constraints(const JointPlan& plan, const MaCoppProblem& problem, int budget,
                                  const conformant::PlannerOptions& options = {});

}  // namespace macopp::mcts
