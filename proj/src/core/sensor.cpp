#include "macopp/core/model.hpp"

#include <algorithm>

#include "macopp/core/errors.hpp"

namespace macopp {

ObservationId SensorModel::intern_symbol(const std::string& token, bool is_null) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].token == token) {
            if (is_null) symbols_[i].is_null = true;
            return static_cast<ObservationId>(i);
        }
    }
    symbols_.push_back({token, is_null});
    return static_cast<ObservationId>(symbols_.size() - 1);
}

std::optional<ObservationId> SensorModel::find_symbol(const std::string& token) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].token == token) return static_cast<ObservationId>(i);
    }
    return std::nullopt;
}

std::optional<ObservationId> SensorModel::null_symbol() const {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].is_null) return static_cast<ObservationId>(i);
    }
    return std::nullopt;
}

void SensorModel::add_rule(SensorRule rule) {
    if (static_cast<std::size_t>(rule.symbol) >= symbols_.size())
        throw InvalidModel("sensor rule refers to an unknown observation symbol");
    std::sort(rule.condition.begin(), rule.condition.end());
    by_action_[rule.action].push_back(rules_.size());
    rules_.push_back(std::move(rule));
}

bool SensorModel::matches(const SensorRule& rule, const GroundAction& action) const {
    if (rule.args.empty()) return true;
    if (rule.args.size() != action.args.size()) return false;
    for (std::size_t i = 0; i < rule.args.size(); ++i) {
        if (rule.args[i] && *rule.args[i] != action.args[i]) return false;
    }
    return true;
}

ObservationId SensorModel::observe(const GroundAction& action, const WorldState& result) const {
    auto it = by_action_.find(action.name);
    if (it != by_action_.end()) {
        for (std::size_t idx : it->second) {
            const SensorRule& rule = rules_[idx];
            if (matches(rule, action) && result.holds_all(rule.condition)) return rule.symbol;
        }
    }
    return default_;
}

std::vector<ObservationId> SensorModel::possible_symbols(const GroundAction& action) const {
    std::vector<ObservationId> out;
    auto add = [&out](ObservationId id) {
        if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    };
    if (auto it = by_action_.find(action.name); it != by_action_.end()) {
        for (std::size_t idx : it->second) {
            const SensorRule& rule = rules_[idx];
            if (!matches(rule, action)) continue;
            add(rule.symbol);
            if (rule.condition.empty()) return out;  // later rules unreachable
        }
    }
    add(default_);
    return out;
}

bool SensorModel::is_coarse(std::span<const GroundAction> robot_actions) const {
    std::unordered_map<std::uint32_t, std::size_t> first_emitter;
    for (std::size_t i = 0; i < robot_actions.size(); ++i) {
        for (ObservationId id : possible_symbols(robot_actions[i])) {
            auto [it, inserted] = first_emitter.emplace(static_cast<std::uint32_t>(id), i);
            if (!inserted && it->second != i) return true;
        }
    }
    return false;
}

SensorModel SensorModel::without_rules_for(const std::string& action_name) const {
    SensorModel copy;
    copy.symbols_ = symbols_;
    copy.default_ = default_;
    for (const auto& rule : rules_) {
        if (rule.action != action_name) copy.add_rule(rule);
    }
    return copy;
}

}  // namespace macopp
