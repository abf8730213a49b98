#include "macopp/bench/report.hpp"

#include <cstdio>
#include <sstream>

namespace macopp::bench {

using nlohmann::ordered_json;

namespace {

ordered_json rational_or_null(const std::optional<Rational>& r) {
    return r ? ordered_json(r->str()) : ordered_json(nullptr);
}

template <class T>
ordered_json value_or_null(const std::optional<T>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string opt_str(const std::optional<Rational>& r) { return r ? r->str() : std::string(); }

}  // namespace

std::string csv_header() {
    return "problem,alpha,solo_cost,joint_human_cost,pct_decrease,joint_length,iterations,time_s,status";
}

std::string csv_row(const RunResult& result) {
    const RunMetrics& m = result.metrics;
    char time[32];
    std::snprintf(time, sizeof time, "%.3f", m.wall_time);
    std::ostringstream os;
    os << csv_cell(m.problem) << ',' << m.alpha.str() << ',' << opt_str(m.solo_cost) << ','
       << opt_str(m.joint_human_cost) << ',' << opt_str(m.percent_decrease) << ','
       << (m.joint_length ? std::to_string(*m.joint_length) : std::string()) << ',' << m.iterations << ','
       << time << ',' << to_string(result.status);
    return os.str();
}

ordered_json report_json(const RunResult& result, const MaCoppProblem& problem, const SearchConfig& config) {
    const RunMetrics& m = result.metrics;
    ordered_json j;
    j["problem"] = m.problem;
    j["status"] = to_string(result.status);

    ordered_json& c = j["config"];
    c["alpha"] = config.alpha.str();
    c["budget"] = config.budget;
    c["iterations"] = config.iterations;
    c["beta"] = config.reward;
    c["phi"] = config.failure_cost;
    c["exploration"] = config.exploration;
    c["uct_epsilon"] = config.uct_epsilon;
    c["backprop_cost_scale"] = config.backprop_cost_scale;
    c["n_best"] = config.n_best;
    c["seed"] = config.seed;
    c["count_observable_only"] = config.count_observable_only;
    c["uct_global_count"] = config.uct_global_count;

    ordered_json& mj = j["metrics"];
    mj["solo_cost"] = rational_or_null(m.solo_cost);
    mj["joint_human_cost"] = rational_or_null(m.joint_human_cost);
    mj["pct_decrease"] = rational_or_null(m.percent_decrease);
    mj["joint_length"] = value_or_null(m.joint_length);
    mj["k"] = value_or_null(m.k);
    mj["iterations"] = m.iterations;
    mj["objective"] = rational_or_null(m.objective);
    mj["feasible"] = m.feasible;

    ordered_json& s = j["search"];
    s["iterations_run"] = result.stats.iterations;
    s["backpropagations"] = result.stats.backpropagations;
    s["nodes"] = result.stats.nodes;
    s["max_depth"] = result.stats.max_depth;
    s["max_simulated_depth"] = result.stats.max_simulated_depth;
    s["plan_cache_entries"] = result.plan_cache_entries;

    j["initial_belief_size"] = result.initial_belief_size;
    if (result.plan) {
        ordered_json prefix = ordered_json::array();
        for (const auto& step : result.plan->robot_prefix) {
            prefix.push_back({{"action", problem.robot_actions[step.action].label()},
                              {"observation", problem.sensor.symbol(step.observation).token},
                              {"null", problem.sensor.is_null(step.observation)},
                              {"belief_size", step.belief_size}});
        }
        ordered_json suffix = ordered_json::array();
        for (std::size_t idx : result.plan->human_suffix.steps) {
            const GroundAction& a = problem.human_actions[idx];
            suffix.push_back({{"action", a.label()}, {"cost", a.cost.str()}});
        }
        j["trace"] = {{"prefix", prefix}, {"suffix", suffix}};
    } else {
        j["trace"] = nullptr;
    }
    if (result.oracle) {
        const OracleResult& o = *result.oracle;
        ordered_json oj;
        oj["objective"] = rational_or_null(o.objective);
        ordered_json prefix = ordered_json::array();
        for (std::size_t a : o.prefix) prefix.push_back(problem.robot_actions[a].label());
        oj["prefix"] = o.objective ? prefix : ordered_json(nullptr);
        oj["k"] = o.objective ? ordered_json(o.k) : ordered_json(nullptr);
        oj["suffix_cost"] = rational_or_null(o.suffix_cost);
        oj["enumerated"] = o.enumerated;
        oj["agrees"] = o.objective == m.objective;
        j["oracle"] = oj;
    }
    return j;
}

std::string render_json(const ordered_json& json) { return json.dump(2) + "\n"; }

ordered_json tree_to_json(const mcts::UtilityTree& tree) {
    const MaCoppProblem& problem = tree.problem();
    ordered_json nodes = ordered_json::array();
    for (mcts::NodeId id = 0; id < tree.size(); ++id) {
        const auto& n = tree.node(id);
        ordered_json node;
        node["id"] = id;
        node["parent"] = value_or_null(n.parent);
        node["depth"] = n.depth;
        node["k"] = tree.k_of(id);
        node["action"] = n.action ? ordered_json(problem.robot_actions[*n.action].label()) : ordered_json(nullptr);
        node["observation"] = n.action ? ordered_json(problem.sensor.symbol(n.observation).token) : ordered_json(nullptr);
        node["belief_size"] = n.belief.size();
        node["utility"] = n.utility;
        node["visits"] = n.visits;
        node["exhausted"] = n.exhausted;
        if (n.sim) {
            ordered_json sim;
            sim["simulated"] = true;
            sim["plan_found"] = n.sim->plan.has_value();
            sim["success"] = n.sim->success;
            sim["suffix_cost"] = n.sim->plan ? ordered_json(n.sim->plan->cost.str()) : ordered_json(nullptr);
            sim["objective"] = rational_or_null(n.sim->objective);
            node["simulation"] = sim;
        } else {
            node["simulation"] = nullptr;
        }
        nodes.push_back(node);
    }
    ordered_json j;
    j["solo_cost"] = rational_or_null(tree.solo_cost());
    j["nodes"] = nodes;
    return j;
}

}  // namespace macopp::bench
