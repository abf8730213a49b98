#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "macopp/conformant/planner.hpp"
#include "macopp/core/model.hpp"

namespace macopp::bench {

struct OracleResult {
    std::optional<Rational> objective;  // nullopt when no prefix is feasible
    std::vector<std::size_t> prefix;    // robot action indices of the optimum
    int k = 0;
    std::optional<Rational> suffix_cost;
    std::size_t enumerated = 0;  // prefixes visited, including the empty one
};

// Exhaustive enumeration of robot prefixes of length ≤ max_depth (and < L),
// one conformant-planner call per resulting belief. Returns the least objective
// among prefixes whose suffix is cheaper than `solo_cost`; ties go to the
// lexicographically smaller action-label sequence. Throws ResourceLimit past `cap`
// prefixes.
OracleResult brute_force_oracle(const MaCoppProblem& problem, const SearchConfig& config, int max_depth,
                                std::optional<Rational> solo_cost, conformant::PlanCache& cache,
                                std::size_t cap = 1'000'000);

}  // namespace macopp::bench
