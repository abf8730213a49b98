#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "macopp/core/model.hpp"
#include "macopp/pddl/domain.hpp"

namespace macopp::pddl {

struct InitSpec {
    std::vector<Fluent> known;
    std::vector<Fluent> unknown;                 // each independently true or false
    std::vector<std::vector<Fluent>> oneof_groups;  // exactly one member true

    // 2^|unknown| * Π |group|, saturating at SIZE_MAX.
    std::size_t expansion_count() const;
};

struct ProblemDef {
    std::string name;
    std::string domain;
    std::vector<TypedName> objects;
    InitSpec init;
    std::vector<Fluent> true_init;  // uncertain fluents that hold in I
    std::vector<Fluent> goal;
};

// Requires the (merged) domain for predicate, constant and type checks.
ProblemDef parse_problem(std::string_view text, const DomainDef& domain);

// One state per combination of oneof choices and unknown valuations, each
// unioned with the known fluents. Throws ResourceLimit when the combination
// count exceeds `cap`.
Belief expand_initial_belief(const InitSpec& init, FluentTable& table, std::size_t cap = 100'000);

// The raw combinations behind expand_initial_belief, before duplicate elimination.
std::vector<WorldState> enumerate_initial_states(const InitSpec& init, FluentTable& table,
                                                 std::size_t cap = 100'000);

// I = known ∪ true_init.
WorldState designated_initial_state(const ProblemDef& problem, FluentTable& table);

}  // namespace macopp::pddl
