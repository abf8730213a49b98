#pragma once

#include <span>

#include "macopp/core/model.hpp"

namespace macopp {

bool applicable(const WorldState& state, const ActionBody& body);

// Γ(s, a) for one action definition. Unconditional effects first, then every
// conditional effect whose condition holds in the pre-transition state.
// Throws InapplicableAction when a precondition is false.
WorldState apply(const WorldState& state, const ActionBody& body, std::string_view label = {});

// True-state transition (uses the base definition).
WorldState apply(const WorldState& state, const GroundAction& action);

// Transition as modeled by the human (uses the belief definition when present).
WorldState apply_believed(const WorldState& state, const GroundAction& action);

ObservationId observe(const GroundAction& action, const WorldState& resulting_state,
                      const SensorModel& sensor);

// B_t = { s' | s ∈ B_{t-1}, a ∈ acting_set, Γ(a, s) = s', O_H(a, s') = ω_t }.
// A null observation leaves the belief unchanged. An empty result throws
// InconsistentObservation.
Belief belief_update(const Belief& belief, std::span<const GroundAction> acting_set,
                     ObservationId observed, const SensorModel& sensor);

// Single-action form used for the human's own (fully known) actions.
Belief belief_update(const Belief& belief, const GroundAction& own_action, ObservationId observed,
                     const SensorModel& sensor);

bool entails_goal(const Belief& belief, std::span<const FluentId> goal);

bool satisfies(const WorldState& state, std::span<const FluentId> goal);

}  // namespace macopp
