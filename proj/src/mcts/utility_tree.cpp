#include "macopp/mcts/utility_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "macopp/core/transition.hpp"

namespace macopp::mcts {

UtilityTree::UtilityTree(const MaCoppProblem& problem, const SearchConfig& config,
                         std::optional<Rational> solo_cost, conformant::PlanCache& cache)
    : problem_(problem), config_(config), solo_cost_(solo_cost), cache_(cache) {
    config_.validate();
    action_order_.resize(problem.robot_actions.size());
    std::iota(action_order_.begin(), action_order_.end(), 0);
    std::mt19937_64 rng(config.seed);
    std::shuffle(action_order_.begin(), action_order_.end(), rng);

    UtilityTreeNode root(problem.initial_state, problem.initial_belief);
    root.observation = problem.sensor.null_symbol().value_or(ObservationId{});
    root.untried = applicable_actions(root.state);
    add_node(std::move(root));
    refresh_exhausted(0);
}

NodeId UtilityTree::add_node(UtilityTreeNode node) {
    stats_.max_depth = std::max(stats_.max_depth, node.depth);
    nodes_.push_back(std::move(node));
    stats_.nodes = nodes_.size();
    return nodes_.size() - 1;
}

std::vector<std::size_t> UtilityTree::applicable_actions(const WorldState& state) const {
    std::vector<std::size_t> out;
    for (std::size_t idx : action_order_)
        if (applicable(state, problem_.robot_actions[idx].body)) out.push_back(idx);
    return out;
}

int UtilityTree::k_of(NodeId id) const {
    const auto& n = nodes_[id];
    return config_.count_observable_only ? n.observable_depth : n.depth;
}

double UtilityTree::uct_value(NodeId child, std::int64_t iteration) const {
    const auto& c = nodes_[child];
    if (c.visits == 0) return std::numeric_limits<double>::infinity();
    double elapsed = config_.uct_global_count ? static_cast<double>(iteration)
                                              : static_cast<double>(nodes_[*c.parent].visits);
    double visits = static_cast<double>(c.visits);
    double exploit = c.utility / (visits + config_.uct_epsilon);
    double explore = config_.exploration * std::sqrt(std::log(std::max(elapsed, 1.0)) / visits);
    return exploit + explore;
}

std::optional<NodeId> UtilityTree::select(std::int64_t iteration) const {
    NodeId current = root();
    while (true) {
        const auto& n = nodes_[current];
        if (n.exhausted) return std::nullopt;
        if (!n.untried.empty()) return current;
        std::optional<NodeId> best;
        double best_value = -std::numeric_limits<double>::infinity();
        for (NodeId c : n.children) {
            if (nodes_[c].exhausted) continue;
            double v = uct_value(c, iteration);
            // Ties go to the lower robot action index.
            if (!best || v > best_value ||
                (v == best_value && *nodes_[c].action < *nodes_[*best].action)) {
                best = c;
                best_value = v;
            }
        }
        if (!best) return std::nullopt;
        current = *best;
    }
}

std::optional<NodeId> UtilityTree::expand(NodeId id) {
    if (nodes_[id].untried.empty() || nodes_[id].depth >= config_.budget) return std::nullopt;
    std::size_t action = nodes_[id].untried.front();
    nodes_[id].untried.erase(nodes_[id].untried.begin());

    const GroundAction& a = problem_.robot_actions[action];
    const UtilityTreeNode& parent = nodes_[id];
    WorldState next = apply(parent.state, a);
    ObservationId obs = observe(a, next, problem_.sensor);
    Belief belief = belief_update(parent.belief, problem_.robot_actions, obs, problem_.sensor);

    UtilityTreeNode child(std::move(next), std::move(belief));
    child.depth = parent.depth + 1;
    child.observable_depth = parent.observable_depth + (problem_.sensor.is_null(obs) ? 0 : 1);
    child.action = action;
    child.observation = obs;
    child.parent = id;
    if (child.depth < config_.budget) child.untried = applicable_actions(child.state);
    bool terminal = child.depth >= config_.budget || child.untried.empty();

    NodeId cid = add_node(std::move(child));
    nodes_[id].children.push_back(cid);
    if (terminal) nodes_[cid].exhausted = true;
    refresh_exhausted(id);
    return cid;
}

void UtilityTree::refresh_exhausted(NodeId id) {
    std::optional<NodeId> current = id;
    while (current) {
        auto& n = nodes_[*current];
        if (n.exhausted) {
            current = n.parent;
            continue;
        }
        bool done = n.untried.empty() &&
                    std::all_of(n.children.begin(), n.children.end(), [&](NodeId c) { return nodes_[c].exhausted; });
        if (!done) return;
        n.exhausted = true;
        current = n.parent;
    }
}

const Simulation& UtilityTree::simulate(NodeId child) {
    auto& n = nodes_[child];
    if (n.sim) return *n.sim;
    Simulation sim;
    conformant::PlanResult result = cache_.lookup(n.belief);
    sim.status = result.status;
    sim.plan = result.plan;
    if (result.found()) {
        const auto& plan = *result.plan;
        bool cheaper = !solo_cost_ || plan.cost < *solo_cost_;
        bool entails = conformant::validate_plan(plan, n.belief, problem_.human_goal, problem_.human_actions);
        sim.success = cheaper && entails;
    }
    if (sim.success) {
        Rational k(k_of(child));
        Rational objective = config_.alpha * k + (Rational(1) - config_.alpha) * sim.plan->cost;
        sim.reward = config_.reward;
        sim.cost = objective.to_double();
        sim.objective = objective;
    } else {
        sim.reward = 0.0;
        sim.cost = config_.failure_cost;
    }
    stats_.max_simulated_depth = std::max(stats_.max_simulated_depth, n.depth);
    n.sim = std::move(sim);
    return *n.sim;
}

void UtilityTree::backpropagate(NodeId child, double value) {
    std::optional<NodeId> current = child;
    while (current) {
        auto& n = nodes_[*current];
        n.utility += value;
        ++n.visits;
        current = n.parent;
    }
    ++stats_.backpropagations;
}

bool UtilityTree::iterate() {
    ++stats_.iterations;
    auto selected = select(stats_.iterations);
    if (!selected) return false;
    auto child = expand(*selected);
    if (!child) return false;
    if (nodes_[*child].depth >= config_.budget) return false;
    const Simulation& sim = simulate(*child);
    backpropagate(*child, sim.reward - sim.cost * config_.backprop_cost_scale);
    return true;
}

void UtilityTree::build() {
    for (int i = 0; i < config_.iterations; ++i) {
        if (nodes_[root()].exhausted) break;
        iterate();
    }
}

std::vector<std::size_t> UtilityTree::path_actions(NodeId id) const {
    std::vector<std::size_t> out;
    for (std::optional<NodeId> n = id; n && nodes_[*n].action; n = nodes_[*n].parent) out.push_back(*nodes_[*n].action);
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace macopp::mcts
