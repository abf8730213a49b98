#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "macopp/conformant/planner.hpp"
#include "macopp/core/model.hpp"

namespace macopp::mcts {

using NodeId = std::size_t;

// Outcome of one simulation: a conformant-planner call from the node's belief.
struct Simulation {
    conformant::PlanStatus status = conformant::PlanStatus::NoPlan;
    std::optional<conformant::ConformantPlan> plan;
    bool success = false;              // plan found, cheaper than solo, goal entailed
    double reward = 0.0;               // β on success, 0 otherwise
    double cost = 0.0;                 // objective on success, φ otherwise
    std::optional<Rational> objective; // α·k + (1−α)·C_H(plan), exact, on success
};

struct UtilityTreeNode {
    UtilityTreeNode(WorldState s, Belief b) : state(std::move(s)), belief(std::move(b)) {}

    WorldState state;  // true state after the robot prefix
    Belief belief;     // simulated human belief B_t
    int depth = 0;     // robot actions on the path
    int observable_depth = 0;  // robot actions on the path with a non-null observation
    std::optional<std::size_t> action;  // robot action on the incoming edge
    ObservationId observation{};        // what the human observed on that edge
    std::optional<NodeId> parent;
    double utility = 0.0;
    std::int64_t visits = 0;
    std::vector<std::size_t> untried;  // applicable robot actions not yet expanded
    std::vector<NodeId> children;
    bool exhausted = false;  // no selectable descendant left
    std::optional<Simulation> sim;
};

struct TreeStats {
    std::int64_t iterations = 0;       // iterations attempted
    std::int64_t backpropagations = 0;
    std::size_t nodes = 0;
    int max_depth = 0;
    int max_simulated_depth = 0;
};

// Single-player MCTS tree whose nodes pair the robot's true state with the
// human's simulated belief. One logical writer; not thread-safe.
class UtilityTree {
public:
    // `solo_cost` is C_H(π*_H); nullopt when the human has no solo plan at all.
    UtilityTree(const MaCoppProblem& problem, const SearchConfig& config, std::optional<Rational> solo_cost,
                conformant::PlanCache& cache);

    NodeId root() const { return 0; }
    const UtilityTreeNode& node(NodeId id) const { return nodes_.at(id); }
    std::size_t size() const { return nodes_.size(); }
    const MaCoppProblem& problem() const { return problem_; }
    const SearchConfig& config() const { return config_; }
    std::optional<Rational> solo_cost() const { return solo_cost_; }

    // k as used in the objective: all robot steps, or only observable ones.
    int k_of(NodeId id) const;

    // Descends by UCT until a node with untried actions. nullopt when the whole
    // tree is exhausted. `iteration` is the 1-based global iteration count.
    std::optional<NodeId> select(std::int64_t iteration) const;

    double uct_value(NodeId child, std::int64_t iteration) const;

    // Expands the next untried action of `id`. nullopt when none remain.
    std::optional<NodeId> expand(NodeId id);

    // Runs the conformant planner from the child's belief and caches the result.
    const Simulation& simulate(NodeId child);

    void backpropagate(NodeId child, double value);

    // One select → expand → guarded simulate → backpropagate round.
    // Returns true when a backpropagation happened.
    bool iterate();

    // Runs up to `config.iterations` iterations, stopping early once exhausted.
    void build();

    const TreeStats& stats() const { return stats_; }

    // Robot action indices from the root to `id`.
    std::vector<std::size_t> path_actions(NodeId id) const;

private:
    NodeId add_node(UtilityTreeNode node);
    std::vector<std::size_t> applicable_actions(const WorldState& state) const;
    void refresh_exhausted(NodeId id);

    const MaCoppProblem& problem_;
    SearchConfig config_;
    std::optional<Rational> solo_cost_;
    conformant::PlanCache& cache_;
    std::vector<std::size_t> action_order_;  // seeded permutation of robot action indices
    std::vector<UtilityTreeNode> nodes_;
    TreeStats stats_;
};

}  // namespace macopp::mcts
