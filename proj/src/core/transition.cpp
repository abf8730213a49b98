#include "macopp/core/transition.hpp"

#include <algorithm>

#include "macopp/core/errors.hpp"

namespace macopp {

namespace {

void apply_effect(std::vector<FluentId>& fluents, std::span<const FluentId> add,
                  std::span<const FluentId> del) {
    fluents.insert(fluents.end(), add.begin(), add.end());
    std::sort(fluents.begin(), fluents.end());
    fluents.erase(std::unique(fluents.begin(), fluents.end()), fluents.end());
    if (!del.empty()) {
        std::erase_if(fluents, [&](FluentId f) { return std::find(del.begin(), del.end(), f) != del.end(); });
    }
}

}  // namespace

bool applicable(const WorldState& state, const ActionBody& body) { return state.holds_all(body.pre); }

WorldState apply(const WorldState& state, const ActionBody& body, std::string_view label) {
    if (!applicable(state, body))
        throw InapplicableAction("action " + std::string(label.empty() ? "<unnamed>" : label) +
                                 " is not applicable: precondition violated");
    std::vector<FluentId> next(state.fluents().begin(), state.fluents().end());
    apply_effect(next, body.add, body.del);
    for (const auto& eff : body.when) {
        if (state.holds_all(eff.condition)) apply_effect(next, eff.add, eff.del);
    }
    return WorldState(std::move(next));
}

WorldState apply(const WorldState& state, const GroundAction& action) {
    return apply(state, action.body, action.label());
}

WorldState apply_believed(const WorldState& state, const GroundAction& action) {
    return apply(state, action.belief_body(), action.label());
}

ObservationId observe(const GroundAction& action, const WorldState& resulting_state,
                      const SensorModel& sensor) {
    return sensor.observe(action, resulting_state);
}

Belief belief_update(const Belief& belief, std::span<const GroundAction> acting_set,
                     ObservationId observed, const SensorModel& sensor) {
    if (sensor.is_null(observed)) return belief;
    std::vector<WorldState> successors;
    for (const auto& s : belief.states()) {
        for (const auto& a : acting_set) {
            if (!applicable(s, a.belief_body())) continue;
            WorldState next = apply_believed(s, a);
            if (sensor.observe(a, next) == observed) successors.push_back(std::move(next));
        }
    }
    if (successors.empty())
        throw InconsistentObservation("no state in the belief is consistent with observation '" +
                                      sensor.symbol(observed).token + "'");
    return Belief(std::move(successors));
}

Belief belief_update(const Belief& belief, const GroundAction& own_action, ObservationId observed,
                     const SensorModel& sensor) {
    return belief_update(belief, std::span<const GroundAction>(&own_action, 1), observed, sensor);
}

bool satisfies(const WorldState& state, std::span<const FluentId> goal) { return state.holds_all(goal); }

bool entails_goal(const Belief& belief, std::span<const FluentId> goal) {
    return std::all_of(belief.states().begin(), belief.states().end(),
                       [&](const WorldState& s) { return s.holds_all(goal); });
}

}  // namespace macopp
