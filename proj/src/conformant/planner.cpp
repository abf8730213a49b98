#include "macopp/conformant/planner.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "macopp/core/errors.hpp"
#include "macopp/core/transition.hpp"

namespace macopp::conformant {

bool strongly_applicable(const Belief& belief, const GroundAction& action) {
    const ActionBody& body = action.belief_body();
    return std::all_of(belief.states().begin(), belief.states().end(),
                       [&](const WorldState& s) { return applicable(s, body); });
}

Belief progress(const Belief& belief, const GroundAction& action) {
    if (!strongly_applicable(belief, action))
        throw InapplicableAction("action " + action.label() + " is not applicable in every state of the belief");
    std::vector<WorldState> next;
    next.reserve(belief.size());
    for (const auto& s : belief.states()) next.push_back(apply_believed(s, action));
    return Belief(std::move(next));
}

Rational plan_cost(std::span<const std::size_t> steps, std::span<const GroundAction> human_actions) {
    Rational total{0};
    for (std::size_t i : steps) total += human_actions[i].cost;
    return total;
}

namespace {

struct SearchNode {
    Belief belief;
    Rational g;
    std::vector<std::uint32_t> ranks;  // action label ranks along the path, for tie-breaking
    std::int64_t parent;
    std::size_t action;
};

bool key_less(const Rational& g1, const std::vector<std::uint32_t>& r1, const Rational& g2,
              const std::vector<std::uint32_t>& r2) {
    if (g1 != g2) return g1 < g2;
    if (r1.size() != r2.size()) return r1.size() < r2.size();
    return r1 < r2;
}

}  // namespace

PlanResult conformant_plan(const Belief& belief, std::span<const FluentId> goal,
                           std::span<const GroundAction> human_actions, const PlannerOptions& options) {
    PlanResult result;

    // Actions are tried in label order so that ranks compare like the labels do.
    std::vector<std::size_t> order(human_actions.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::string> labels;
    labels.reserve(human_actions.size());
    for (const auto& a : human_actions) labels.push_back(a.label());
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });

    std::vector<SearchNode> nodes;
    std::unordered_map<Belief, std::size_t> best;  // belief -> node with the best key seen
    std::vector<bool> closed;
    auto worse = [&nodes](std::size_t a, std::size_t b) {
        return key_less(nodes[b].g, nodes[b].ranks, nodes[a].g, nodes[a].ranks);
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> open(worse);

    nodes.push_back({belief, Rational(0), {}, -1, 0});
    closed.push_back(false);
    best.emplace(belief, 0);
    open.push(0);

    while (!open.empty()) {
        std::size_t idx = open.top();
        open.pop();
        if (closed[idx]) continue;
        if (best.at(nodes[idx].belief) != idx) continue;  // stale entry
        closed[idx] = true;

        if (entails_goal(nodes[idx].belief, goal)) {
            ConformantPlan plan;
            for (std::int64_t n = static_cast<std::int64_t>(idx); nodes[n].parent >= 0; n = nodes[n].parent)
                plan.steps.push_back(nodes[n].action);
            std::reverse(plan.steps.begin(), plan.steps.end());
            plan.cost = nodes[idx].g;
            result.status = PlanStatus::Found;
            result.plan = std::move(plan);
            return result;
        }

        if (++result.expanded > options.node_budget) {
            result.status = PlanStatus::BudgetExhausted;
            return result;
        }

        for (std::uint32_t rank = 0; rank < order.size(); ++rank) {
            const GroundAction& action = human_actions[order[rank]];
            if (!strongly_applicable(nodes[idx].belief, action)) continue;
            Belief next = progress(nodes[idx].belief, action);
            Rational g = nodes[idx].g + action.cost;
            std::vector<std::uint32_t> ranks = nodes[idx].ranks;
            ranks.push_back(rank);

            auto it = best.find(next);
            if (it != best.end()) {
                const SearchNode& existing = nodes[it->second];
                if (closed[it->second] || !key_less(g, ranks, existing.g, existing.ranks)) continue;
            }
            std::size_t child = nodes.size();
            nodes.push_back({next, g, std::move(ranks), static_cast<std::int64_t>(idx), order[rank]});
            closed.push_back(false);
            best.insert_or_assign(std::move(next), child);
            open.push(child);
        }
    }
    result.status = PlanStatus::NoPlan;
    return result;
}

bool validate_plan(const ConformantPlan& plan, const Belief& belief, std::span<const FluentId> goal,
                   std::span<const GroundAction> human_actions) {
    Belief current = belief;
    for (std::size_t step : plan.steps) {
        if (step >= human_actions.size()) return false;
        const GroundAction& action = human_actions[step];
        if (!strongly_applicable(current, action)) return false;
        current = progress(current, action);
    }
    return entails_goal(current, goal);
}

bool executes_to_goal(const ConformantPlan& plan, const WorldState& state, std::span<const FluentId> goal,
                      std::span<const GroundAction> human_actions) {
    WorldState current = state;
    for (std::size_t step : plan.steps) {
        if (step >= human_actions.size()) return false;
        const GroundAction& action = human_actions[step];
        if (!applicable(current, action.body)) return false;
        current = apply(current, action);
    }
    return satisfies(current, goal);
}

PlanCache::PlanCache(std::span<const FluentId> goal, std::span<const GroundAction> human_actions,
                     PlannerOptions options)
    : goal_(goal.begin(), goal.end()), actions_(human_actions), options_(options) {}

PlanResult PlanCache::lookup(const Belief& belief) {
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(belief); it != cache_.end()) {
            ++hits_;
            return it->second;
        }
    }
    PlanResult result = conformant_plan(belief, goal_, actions_, options_);
    std::lock_guard lock(mutex_);
    ++misses_;
    cache_.emplace(belief, result);
    return result;
}

std::size_t PlanCache::size() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
}

std::size_t PlanCache::hits() const {
    std::lock_guard lock(mutex_);
    return hits_;
}

std::size_t PlanCache::misses() const {
    std::lock_guard lock(mutex_);
    return misses_;
}

}  // namespace macopp::conformant
