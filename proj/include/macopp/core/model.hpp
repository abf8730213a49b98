#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "macopp/core/rational.hpp"

namespace macopp {

enum class Actor { Robot, Human };

std::string_view to_string(Actor actor);

// A ground atom such as (medkit-at roomB).
struct Fluent {
    std::string name;
    std::vector<std::string> args;

    std::string str() const;
    auto operator<=>(const Fluent&) const = default;
};

enum class FluentId : std::uint32_t {};

struct FluentHash {
    std::size_t operator()(const Fluent& f) const;
};

// Interns fluents so states can be stored as sorted id vectors.
class FluentTable {
public:
    FluentId intern(const Fluent& fluent);
    std::optional<FluentId> find(const Fluent& fluent) const;
    const Fluent& at(FluentId id) const { return fluents_.at(static_cast<std::size_t>(id)); }
    std::size_t size() const { return fluents_.size(); }

private:
    std::vector<Fluent> fluents_;
    std::unordered_map<Fluent, FluentId, FluentHash> index_;
};

// Closed-world state: the sorted set of true fluents.
class WorldState {
public:
    WorldState() = default;
    explicit WorldState(std::vector<FluentId> fluents);

    bool holds(FluentId f) const;
    bool holds_all(std::span<const FluentId> fs) const;
    std::span<const FluentId> fluents() const { return fluents_; }
    std::size_t hash() const;

    auto operator<=>(const WorldState&) const = default;

private:
    std::vector<FluentId> fluents_;
};

// The human's epistemic state: a non-empty, sorted, duplicate-free set of states.
class Belief {
public:
    explicit Belief(std::vector<WorldState> states);
    explicit Belief(WorldState state);

    std::size_t size() const { return states_.size(); }
    bool is_singleton() const { return states_.size() == 1; }
    bool contains(const WorldState& s) const;
    std::span<const WorldState> states() const { return states_; }
    std::size_t hash() const;

    auto operator<=>(const Belief&) const = default;

private:
    std::vector<WorldState> states_;
};

struct ConditionalEffect {
    std::vector<FluentId> condition;
    std::vector<FluentId> add;
    std::vector<FluentId> del;

    bool operator==(const ConditionalEffect&) const = default;
};

// Preconditions plus effects of one action definition.
struct ActionBody {
    std::vector<FluentId> pre;
    std::vector<FluentId> add;
    std::vector<FluentId> del;
    std::vector<ConditionalEffect> when;

    bool operator==(const ActionBody&) const = default;
};

struct GroundAction {
    Actor actor = Actor::Robot;
    std::string name;
    std::vector<std::string> args;
    ActionBody body;                   // true-state transition
    std::optional<ActionBody> belief;  // the "belief" definition, when the domain declares one
    Rational cost{1};

    // Definition the human uses to reason about this action.
    const ActionBody& belief_body() const { return belief ? *belief : body; }

    // "(name arg1 arg2)"
    std::string label() const;
};

enum class ObservationId : std::uint32_t {};

struct ObservationSymbol {
    std::string token;
    bool is_null = false;
};

struct SensorRule {
    std::string action;
    // One entry per action argument; nullopt matches anything. Empty matches all arities.
    std::vector<std::optional<std::string>> args;
    std::vector<FluentId> condition;
    ObservationId symbol{};
};

// H's sensor model O_H. Ordered rules, first match wins, explicit default.
class SensorModel {
public:
    SensorModel() = default;

    ObservationId intern_symbol(const std::string& token, bool is_null = false);
    std::optional<ObservationId> find_symbol(const std::string& token) const;
    void set_default(ObservationId symbol) { default_ = symbol; }
    void add_rule(SensorRule rule);

    ObservationId observe(const GroundAction& action, const WorldState& result) const;

    const ObservationSymbol& symbol(ObservationId id) const {
        return symbols_.at(static_cast<std::size_t>(id));
    }
    bool is_null(ObservationId id) const { return symbol(id).is_null; }
    std::optional<ObservationId> null_symbol() const;
    ObservationId default_symbol() const { return default_; }
    std::span<const ObservationSymbol> symbols() const { return symbols_; }
    std::span<const SensorRule> rules() const { return rules_; }

    // Symbols `action` can emit in some state, in rule order.
    std::vector<ObservationId> possible_symbols(const GroundAction& action) const;

    // Coarse-graining requirement: two distinct robot actions can emit the same symbol.
    bool is_coarse(std::span<const GroundAction> robot_actions) const;

    // Copy with every rule for `action_name` removed.
    SensorModel without_rules_for(const std::string& action_name) const;

private:
    bool matches(const SensorRule& rule, const GroundAction& action) const;

    std::vector<ObservationSymbol> symbols_;
    std::vector<SensorRule> rules_;
    std::unordered_map<std::string, std::vector<std::size_t>> by_action_;
    ObservationId default_{};
};

struct MaCoppProblem {
    std::string name;
    FluentTable fluents;
    std::vector<GroundAction> human_actions;
    std::vector<GroundAction> robot_actions;
    WorldState initial_state;
    Belief initial_belief{WorldState{}};
    std::vector<FluentId> human_goal;
    SensorModel sensor;

    // Throws InvalidModel when an invariant of the formal problem is violated.
    void validate() const;

    // Some two distinct robot (action, successor) pairs share an observation:
    // statically across actions, or for one action over the initial belief.
    bool coarse_grained() const;

    std::string describe(const WorldState& s) const;
};

struct SearchConfig {
    Rational alpha{1, 2};
    int budget = 15;           // L
    int iterations = 10000;    // m
    double reward = 100.0;     // β
    double failure_cost = 50.0;  // φ
    double exploration = 1.4142135623730951;
    double uct_epsilon = 1e-6;
    double backprop_cost_scale = 1.0;
    int n_best = 3;
    std::uint64_t seed = 0;
    bool count_observable_only = false;
    bool uct_global_count = false;  // use the global iteration count inside the UCT log term

    void validate() const;
};

}  // namespace macopp

template <>
struct std::hash<macopp::WorldState> {
    std::size_t operator()(const macopp::WorldState& s) const { return s.hash(); }
};

template <>
struct std::hash<macopp::Belief> {
    std::size_t operator()(const macopp::Belief& b) const { return b.hash(); }
};
