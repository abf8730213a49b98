#pragma once

// Shared fixtures and reference implementations for the tests. The reference
// code works on std::set<FluentId> and shares nothing with the library beyond
// the model types and the sensor lookup.

#include <filesystem>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "macopp/core/model.hpp"
#include "macopp/pddl/loader.hpp"

namespace support {

using namespace macopp;

std::filesystem::path data_dir();

pddl::ProblemPaths bundled(const std::string& name, const std::string& sensors = "sensors.txt");

MaCoppProblem load_bundled(const std::string& name, const std::string& sensors = "sensors.txt");

// "(medkit-at roomb)" or "medkit-at roomb" → Fluent.
Fluent fluent(const std::string& text);

// Hand-built models.
struct Toy {
    FluentTable table;

    FluentId id(const std::string& text) { return table.intern(fluent(text)); }
    std::vector<FluentId> ids(std::initializer_list<const char*> texts);
    WorldState state(std::initializer_list<const char*> texts);
};

using StateSet = std::set<FluentId>;

StateSet to_set(const WorldState& s);
WorldState to_state(const StateSet& s);

// Γ by the book; nullopt when a precondition fails.
std::optional<StateSet> ref_apply(const StateSet& s, const ActionBody& body);

// The update set {s' | s ∈ B, a ∈ acting, Γ(a,s) = s', O(a,s') = ω}, or B itself for ω∅.
std::set<WorldState> ref_belief_update(const Belief& belief, std::span<const GroundAction> acting, ObservationId obs,
                                       const SensorModel& sensor);

// Optimal conformant cost by Bellman-Ford over all beliefs reachable from `belief`.
// nullopt when no plan exists; throws std::runtime_error past `max_beliefs`.
std::optional<Rational> ref_conformant_cost(const Belief& belief, std::span<const FluentId> goal,
                                            std::span<const GroundAction> actions,
                                            std::size_t max_beliefs = 200'000);

// Cheapest goal-entailing sequence among all strongly applicable sequences of
// length ≤ max_len, by plain enumeration.
std::optional<Rational> enumerate_sequences(const Belief& belief, std::span<const FluentId> goal,
                                            std::span<const GroundAction> actions, int max_len);

// Robot-side branching factor: most applicable robot actions in any state
// reachable through robot actions from I within `depth` steps.
std::size_t robot_branching(const MaCoppProblem& problem, int depth);

// States reachable from B_0 by any interleaving of robot and human actions
// (base and belief definitions).
std::size_t reachable_states(const MaCoppProblem& problem, std::size_t cap = 100'000);

}  // namespace support
