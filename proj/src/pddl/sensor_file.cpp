#include "macopp/pddl/sensor_file.hpp"

#include <algorithm>

namespace macopp::pddl {

namespace {

bool is_wildcard(std::string_view term) { return term == "_" || is_variable(term); }

SensorRuleSpec read_rule(const SExpr& form) {
    SensorRuleSpec rule;
    rule.pos = form.pos;
    const auto& items = form.items;
    if (items.size() < 3 || items[1].is_list)
        throw ParseError("(rule <action> [(args ...)] [(condition ...)] <token>) expected", form.pos);
    rule.action = items[1].atom;
    std::size_t i = 2;
    for (; i + 1 < items.size(); ++i) {
        const SExpr& clause = items[i];
        if (clause.is_form("args")) {
            if (rule.args) throw ParseError("duplicate (args ...) clause", clause.pos);
            rule.args.emplace();
            for (std::size_t k = 1; k < clause.items.size(); ++k) {
                if (clause.items[k].is_list) throw ParseError("args entries must be symbols", clause.items[k].pos);
                rule.args->push_back(clause.items[k].atom);
            }
        } else if (clause.is_form("condition")) {
            for (std::size_t k = 1; k < clause.items.size(); ++k) {
                const SExpr& c = clause.items[k];
                if (c.is_form("and")) {
                    for (std::size_t j = 1; j < c.items.size(); ++j) rule.condition.push_back(parse_atom(c.items[j]));
                } else {
                    rule.condition.push_back(parse_atom(c));
                }
            }
        } else {
            throw ParseError("unexpected clause in rule: " + clause.str(), clause.pos);
        }
    }
    if (i != items.size() - 1 || items.back().is_list)
        throw ParseError("rule must end with an observation token", form.pos);
    rule.token = items.back().atom;
    return rule;
}

}  // namespace

SensorSpec read_sensor_spec(std::string_view text) {
    SensorSpec spec;
    for (const SExpr& form : read_sexprs(text)) {
        if (form.is_form("default")) {
            if (spec.default_token) throw ParseError("duplicate default declaration", form.pos);
            if (form.items.size() < 2 || form.items.size() > 3 || form.items[1].is_list)
                throw ParseError("(default <token> [null]) expected", form.pos);
            spec.default_token = form.items[1].atom;
            if (form.items.size() == 3) {
                if (!form.items[2].is_atom("null")) throw ParseError("expected 'null' marker", form.items[2].pos);
                spec.default_is_null = true;
            }
        } else if (form.is_form("null")) {
            if (spec.null_token) throw ParseError("duplicate null declaration", form.pos);
            if (form.items.size() != 2 || form.items[1].is_list) throw ParseError("(null <token>) expected", form.pos);
            spec.null_token = form.items[1].atom;
        } else if (form.is_form("rule")) {
            spec.rules.push_back(read_rule(form));
        } else {
            throw ParseError("expected (default ...), (null ...) or (rule ...), found " + form.str(), form.pos);
        }
    }
    return spec;
}

namespace {

struct Resolved {
    const ActionSchema* schema;
    std::vector<std::optional<std::string>> pattern;
    bool condition_has_vars = false;
};

Resolved resolve(const SensorRuleSpec& rule, const DomainDef& domain) {
    const ActionSchema* schema = domain.action(rule.action, false);
    if (!schema) throw ParseError("sensor rule references unknown action '" + rule.action + "'", rule.pos);
    Resolved r{schema, {}, false};
    if (rule.args) {
        if (rule.args->size() != schema->params.size())
            throw ParseError("rule for '" + rule.action + "' binds " + std::to_string(rule.args->size()) +
                                 " argument(s); the action takes " + std::to_string(schema->params.size()),
                             rule.pos);
        for (const auto& a : *rule.args) {
            if (is_wildcard(a)) {
                r.pattern.emplace_back(std::nullopt);
            } else {
                r.pattern.emplace_back(a);
            }
        }
    }
    for (const auto& atom : rule.condition) {
        const PredicateDecl* p = domain.predicate(atom.predicate);
        if (!p) throw ParseError("undeclared predicate '" + atom.predicate + "' in sensor rule", atom.pos);
        if (p->params.size() != atom.terms.size())
            throw ParseError("arity mismatch for '" + atom.predicate + "' in sensor rule", atom.pos);
        for (const auto& term : atom.terms) {
            if (!is_variable(term)) continue;
            bool bound = std::any_of(schema->params.begin(), schema->params.end(),
                                     [&](const TypedName& t) { return t.name == term; });
            if (!bound)
                throw ParseError("variable '" + term + "' is not a parameter of '" + rule.action + "'", atom.pos);
            r.condition_has_vars = true;
        }
    }
    return r;
}

bool pattern_matches(const std::vector<std::optional<std::string>>& pattern, const GroundAction& a) {
    if (pattern.empty()) return true;
    if (pattern.size() != a.args.size()) return false;
    for (std::size_t i = 0; i < pattern.size(); ++i)
        if (pattern[i] && *pattern[i] != a.args[i]) return false;
    return true;
}

// Ground condition ids, or nullopt when some atom can never hold.
std::optional<std::vector<FluentId>> ground_condition(const std::vector<AtomTemplate>& condition,
                                                      const ActionSchema& schema, const GroundAction* action,
                                                      const FluentTable& table) {
    std::vector<FluentId> out;
    for (const auto& atom : condition) {
        Fluent f{atom.predicate, {}};
        for (const auto& term : atom.terms) {
            if (!is_variable(term)) {
                f.args.push_back(term);
                continue;
            }
            for (std::size_t i = 0; i < schema.params.size(); ++i)
                if (schema.params[i].name == term) f.args.push_back(action->args[i]);
        }
        auto id = table.find(f);
        if (!id) return std::nullopt;
        out.push_back(*id);
    }
    return out;
}

}  // namespace

SensorModel compile_sensor(const SensorSpec& spec, const DomainDef& domain, std::span<const GroundAction> robot,
                           std::span<const GroundAction> human, const FluentTable& table) {
    SensorModel model;
    std::optional<std::string> null_token = spec.null_token;
    if (spec.default_is_null) {
        if (null_token && *null_token != *spec.default_token)
            throw ParseError("more than one observation declared null", {});
        null_token = spec.default_token;
    }
    if (!null_token) throw ParseError("no null observation declared; use (default <token> null) or (null <token>)", {});
    ObservationId null_id = model.intern_symbol(*null_token, true);
    model.set_default(spec.default_token ? model.intern_symbol(*spec.default_token) : null_id);

    for (const auto& rule : spec.rules) {
        Resolved r = resolve(rule, domain);
        ObservationId symbol = model.intern_symbol(rule.token);
        if (!r.condition_has_vars) {
            auto cond = ground_condition(rule.condition, *r.schema, nullptr, table);
            if (cond) model.add_rule({rule.action, r.pattern, *cond, symbol});
            continue;
        }
        for (auto actions : {robot, human}) {
            for (const auto& a : actions) {
                if (a.name != rule.action || !pattern_matches(r.pattern, a)) continue;
                auto cond = ground_condition(rule.condition, *r.schema, &a, table);
                if (!cond) continue;
                std::vector<std::optional<std::string>> exact(a.args.begin(), a.args.end());
                model.add_rule({rule.action, std::move(exact), *cond, symbol});
            }
        }
    }
    return model;
}

SensorModel parse_sensor(std::string_view text, const DomainDef& domain, std::span<const GroundAction> robot,
                         std::span<const GroundAction> human, const FluentTable& table) {
    return compile_sensor(read_sensor_spec(text), domain, robot, human, table);
}

}  // namespace macopp::pddl
