#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "macopp/core/model.hpp"

namespace macopp::conformant {

struct ConformantPlan {
    std::vector<std::size_t> steps;  // indices into the human action set
    Rational cost{0};
};

enum class PlanStatus {
    Found,
    NoPlan,          // search space exhausted without reaching the goal
    BudgetExhausted  // node budget hit; optimality unknown
};

struct PlanResult {
    PlanStatus status = PlanStatus::NoPlan;
    std::optional<ConformantPlan> plan;
    std::size_t expanded = 0;

    bool found() const { return status == PlanStatus::Found; }
};

struct PlannerOptions {
    std::size_t node_budget = 1'000'000;
};

// Strong applicability: the belief precondition holds in every state.
bool strongly_applicable(const Belief& belief, const GroundAction& action);

// Per-state application of the action's belief definition. Throws
// InapplicableAction when not strongly applicable.
Belief progress(const Belief& belief, const GroundAction& action);

// Minimum-cost conformant plan by uniform-cost search over beliefs.
// Equal-cost plans are ordered by length, then by the sequence of action labels.
PlanResult conformant_plan(const Belief& belief, std::span<const FluentId> goal,
                           std::span<const GroundAction> human_actions, const PlannerOptions& options = {});

// Independent check: every step strongly applicable, final belief entails goal.
bool validate_plan(const ConformantPlan& plan, const Belief& belief, std::span<const FluentId> goal,
                   std::span<const GroundAction> human_actions);

// Executes the base definitions from a concrete state; true iff every step applies
// and the final state satisfies the goal.
bool executes_to_goal(const ConformantPlan& plan, const WorldState& state, std::span<const FluentId> goal,
                      std::span<const GroundAction> human_actions);

Rational plan_cost(std::span<const std::size_t> steps, std::span<const GroundAction> human_actions);

// Memoizes conformant_plan results per belief for one (goal, action set).
class PlanCache {
public:
    PlanCache(std::span<const FluentId> goal, std::span<const GroundAction> human_actions,
              PlannerOptions options = {});

    PlanResult lookup(const Belief& belief);

    std::size_t size() const;
    std::size_t hits() const;
    std::size_t misses() const;

private:
    std::vector<FluentId> goal_;
    std::span<const GroundAction> actions_;
    PlannerOptions options_;
    mutable std::mutex mutex_;
    std::unordered_map<Belief, PlanResult> cache_;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
};

}  // namespace macopp::conformant
