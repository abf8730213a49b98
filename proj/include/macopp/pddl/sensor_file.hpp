#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "macopp/core/model.hpp"
#include "macopp/pddl/domain.hpp"

namespace macopp::pddl {

struct SensorRuleSpec {
    std::string action;
    std::optional<std::vector<std::string>> args;  // '?'-prefixed entries are wildcards
    std::vector<AtomTemplate> condition;           // may use the action's parameter names
    std::string token;
    SourcePos pos;
};

struct SensorSpec {
    std::vector<SensorRuleSpec> rules;
    std::optional<std::string> default_token;
    bool default_is_null = false;
    std::optional<std::string> null_token;  // from a (null <token>) declaration
};

// Syntax only: (default <token> [null]), (null <token>),
// (rule <action> [(args ...)] [(condition <atoms>)] <token>).
SensorSpec read_sensor_spec(std::string_view text);

// Resolves a spec against the domain and the ground actions. Conditions that
// mention action parameters are expanded into one rule per matching ground action.
SensorModel compile_sensor(const SensorSpec& spec, const DomainDef& domain, std::span<const GroundAction> robot,
                           std::span<const GroundAction> human, const FluentTable& table);

SensorModel parse_sensor(std::string_view text, const DomainDef& domain, std::span<const GroundAction> robot,
                         std::span<const GroundAction> human, const FluentTable& table);

}  // namespace macopp::pddl
