#include "macopp/core/model.hpp"

#include <algorithm>
#include <sstream>

#include "macopp/core/errors.hpp"
#include "macopp/core/transition.hpp"

namespace macopp {

namespace {

inline void hash_combine(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

std::string_view to_string(Actor actor) { return actor == Actor::Robot ? "robot" : "human"; }

std::string Fluent::str() const {
    std::string out = "(" + name;
    for (const auto& a : args) out += " " + a;
    return out + ")";
}

std::size_t FluentHash::operator()(const Fluent& f) const {
    std::size_t seed = std::hash<std::string>{}(f.name);
    for (const auto& a : f.args) hash_combine(seed, std::hash<std::string>{}(a));
    return seed;
}

FluentId FluentTable::intern(const Fluent& fluent) {
    if (auto it = index_.find(fluent); it != index_.end()) return it->second;
    auto id = static_cast<FluentId>(fluents_.size());
    fluents_.push_back(fluent);
    index_.emplace(fluent, id);
    return id;
}

std::optional<FluentId> FluentTable::find(const Fluent& fluent) const {
    if (auto it = index_.find(fluent); it != index_.end()) return it->second;
    return std::nullopt;
}

WorldState::WorldState(std::vector<FluentId> fluents) : fluents_(std::move(fluents)) {
    std::sort(fluents_.begin(), fluents_.end());
    fluents_.erase(std::unique(fluents_.begin(), fluents_.end()), fluents_.end());
}

bool WorldState::holds(FluentId f) const {
    return std::binary_search(fluents_.begin(), fluents_.end(), f);
}

bool WorldState::holds_all(std::span<const FluentId> fs) const {
    return std::all_of(fs.begin(), fs.end(), [this](FluentId f) { return holds(f); });
}

std::size_t WorldState::hash() const {
    std::size_t seed = fluents_.size();
    for (FluentId f : fluents_) hash_combine(seed, static_cast<std::size_t>(f));
    return seed;
}

Belief::Belief(std::vector<WorldState> states) : states_(std::move(states)) {
    if (states_.empty()) throw InvalidModel("belief must contain at least one state");
    std::sort(states_.begin(), states_.end());
    states_.erase(std::unique(states_.begin(), states_.end()), states_.end());
}

Belief::Belief(WorldState state) { states_.push_back(std::move(state)); }

bool Belief::contains(const WorldState& s) const {
    return std::binary_search(states_.begin(), states_.end(), s);
}

std::size_t Belief::hash() const {
    std::size_t seed = states_.size();
    for (const auto& s : states_) hash_combine(seed, s.hash());
    return seed;
}

std::string GroundAction::label() const {
    std::string out = "(" + name;
    for (const auto& a : args) out += " " + a;
    return out + ")";
}

void MaCoppProblem::validate() const {
    if (!initial_belief.contains(initial_state))
        throw InvalidModel("initial state is not a member of the initial belief");
    for (FluentId g : human_goal) {
        if (static_cast<std::size_t>(g) >= fluents.size())
            throw InvalidModel("goal references an undeclared fluent");
    }
    for (const auto& a : human_actions) {
        if (a.actor != Actor::Human) throw InvalidModel("robot-tagged action in human set: " + a.label());
    }
    for (const auto& a : robot_actions) {
        if (a.actor != Actor::Robot) throw InvalidModel("human-tagged action in robot set: " + a.label());
    }
    for (const auto* set : {&human_actions, &robot_actions}) {
        for (const auto& a : *set) {
            if (a.cost < Rational(0)) throw InvalidModel("negative cost on " + a.label());
            for (FluentId f : a.body.add) {
                if (std::find(a.body.del.begin(), a.body.del.end(), f) != a.body.del.end())
                    throw InvalidModel("add and delete effects overlap on " + a.label());
            }
        }
    }
    auto null_count = std::count_if(sensor.symbols().begin(), sensor.symbols().end(),
                                    [](const ObservationSymbol& s) { return s.is_null; });
    if (null_count != 1) throw InvalidModel("sensor model must declare exactly one null observation");
    if (!coarse_grained())
        throw InvalidModel("sensor model distinguishes every robot step; at least two must share an observation");
}

bool MaCoppProblem::coarse_grained() const {
    if (sensor.is_coarse(robot_actions)) return true;
    // One action can still be coarse on its own: the same symbol after two
    // different successors. Checked over the steps the human may consider first.
    std::unordered_map<std::uint32_t, std::pair<std::size_t, WorldState>> first;
    for (const auto& s : initial_belief.states()) {
        for (std::size_t i = 0; i < robot_actions.size(); ++i) {
            const GroundAction& a = robot_actions[i];
            for (const ActionBody* body : {&a.body, &a.belief_body()}) {
                if (!applicable(s, *body)) continue;
                WorldState next = apply(s, *body, a.label());
                auto id = static_cast<std::uint32_t>(sensor.observe(a, next));
                auto [it, inserted] = first.emplace(id, std::make_pair(i, next));
                if (!inserted && (it->second.first != i || it->second.second != next)) return true;
            }
        }
    }
    return false;
}

std::string MaCoppProblem::describe(const WorldState& s) const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (FluentId f : s.fluents()) {
        os << (first ? "" : " ") << fluents.at(f).str();
        first = false;
    }
    os << "}";
    return os.str();
}

void SearchConfig::validate() const {
    if (alpha < Rational(0) || alpha > Rational(1)) throw InvalidModel("alpha must lie in [0, 1]");
    if (budget < 1) throw InvalidModel("budget L must be at least 1");
    if (iterations < 0) throw InvalidModel("iterations must be non-negative");
    if (n_best < 1) throw InvalidModel("n_best must be at least 1");
    if (uct_epsilon <= 0) throw InvalidModel("uct epsilon must be positive");
    if (backprop_cost_scale <= 0) throw InvalidModel("backpropagation cost scale must be positive");
}

}  // namespace macopp
