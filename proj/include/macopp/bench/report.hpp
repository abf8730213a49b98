#pragma once

#include <string>

#include <json.hpp>

#include "macopp/bench/run.hpp"
#include "macopp/mcts/utility_tree.hpp"

namespace macopp::bench {

// Fixed column order of the metrics table.
std::string csv_header();

// One data row. Infeasible runs leave the plan-dependent cells empty.
std::string csv_row(const RunResult& result);

// Full report: configuration, metrics, search statistics and the joint-plan
// trace. Holds no timing so that identical runs serialize identically.
nlohmann::ordered_json report_json(const RunResult& result, const MaCoppProblem& problem,
                                   const SearchConfig& config);

std::string render_json(const nlohmann::ordered_json& json);

nlohmann::ordered_json tree_to_json(const mcts::UtilityTree& tree);

}  // namespace macopp::bench
