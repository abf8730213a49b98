#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "macopp/core/model.hpp"
#include "macopp/pddl/sexpr.hpp"

namespace macopp::pddl {

inline bool is_variable(std::string_view term) { return !term.empty() && term.front() == '?'; }

struct TypedName {
    std::string name;
    std::string type = "object";
    SourcePos pos;

    bool operator==(const TypedName& o) const { return name == o.name && type == o.type; }
};

// A predicate applied to variables (?x) and/or constants.
struct AtomTemplate {
    std::string predicate;
    std::vector<std::string> terms;
    SourcePos pos;

    bool operator==(const AtomTemplate& o) const { return predicate == o.predicate && terms == o.terms; }
    std::string str() const;
};

struct ConditionalTemplate {
    std::vector<AtomTemplate> condition;
    std::vector<AtomTemplate> add;
    std::vector<AtomTemplate> del;

    bool operator==(const ConditionalTemplate&) const = default;
};

struct ActionSchema {
    std::string name;
    Actor actor = Actor::Robot;
    bool belief_variant = false;
    std::vector<TypedName> params;
    std::vector<AtomTemplate> pre;
    std::vector<AtomTemplate> add;
    std::vector<AtomTemplate> del;
    std::vector<ConditionalTemplate> when;
    Rational cost{1};
    SourcePos pos;

    bool operator==(const ActionSchema& o) const {
        return name == o.name && actor == o.actor && belief_variant == o.belief_variant && params == o.params &&
               pre == o.pre && add == o.add && del == o.del && when == o.when && cost == o.cost;
    }
};

struct PredicateDecl {
    std::string name;
    std::vector<TypedName> params;

    bool operator==(const PredicateDecl&) const = default;
};

struct DomainDef {
    std::string name;
    std::vector<std::string> types;
    std::vector<TypedName> constants;
    std::vector<PredicateDecl> predicates;
    std::vector<ActionSchema> actions;

    const PredicateDecl* predicate(std::string_view name) const;
    const TypedName* constant(std::string_view name) const;
    const ActionSchema* action(std::string_view name, bool belief_variant = false) const;
    bool has_type(std::string_view type) const;

    bool operator==(const DomainDef&) const = default;
};

// Parses one domain file. Actions without an `:actor` annotation get `default_actor`.
DomainDef parse_domain(std::string_view text, Actor default_actor = Actor::Robot);

// Canonical text; parse_domain(print_domain(d)) == d.
std::string print_domain(const DomainDef& domain);

// Union of the robot's and the human's domain versions. Predicates, types and
// constants must agree where they overlap; action names must not collide.
DomainDef merge_domains(const DomainDef& robot, const DomainDef& human);

// Shared helpers for the problem and sensor readers.
std::vector<TypedName> parse_typed_list(const std::vector<SExpr>& items, std::size_t start, bool variables);
AtomTemplate parse_atom(const SExpr& expr);

}  // namespace macopp::pddl
