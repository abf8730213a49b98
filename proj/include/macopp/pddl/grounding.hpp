#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "macopp/core/model.hpp"
#include "macopp/pddl/domain.hpp"
#include "macopp/pddl/problem.hpp"

namespace macopp::pddl {

struct GroundedActions {
    std::vector<GroundAction> robot;
    std::vector<GroundAction> human;
    std::size_t candidate_count = 0;  // type-consistent instantiations before static pruning
};

// Predicates that no action (base or belief definition) adds or deletes.
std::set<std::string> static_predicates(const DomainDef& domain);

// All type-consistent instantiations of the domain's schemas over the problem's
// objects and the domain constants. Instances whose static preconditions cannot
// hold in any initial state are dropped. Base and belief definitions of one
// schema are grounded together and stored on the same GroundAction.
GroundedActions ground(const DomainDef& domain, const ProblemDef& problem, FluentTable& table);

}  // namespace macopp::pddl
