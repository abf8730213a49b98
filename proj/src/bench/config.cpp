#include "macopp/bench/config.hpp"

#include <cstdlib>

#include <json.hpp>

namespace macopp::bench {

namespace {

using nlohmann::json;

Rational to_rational(const json& v, const std::string& key) {
    try {
        if (v.is_string()) return Rational::parse(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
        if (v.is_number_float()) return Rational::parse(v.dump());
    } catch (const std::exception&) {
    }
    throw ConfigError("config key '" + key + "' expects a number or an exact fraction");
}

template <class T>
T get_as(const json& v, const std::string& key) {
    try {
        return v.get<T>();
    } catch (const json::exception&) {
        throw ConfigError("config key '" + key + "' has the wrong type");
    }
}

std::filesystem::path resolve(const json& v, const std::string& key, const std::filesystem::path& base) {
    std::filesystem::path p = get_as<std::string>(v, key);
    if (p.is_relative() && !base.empty()) p = base / p;
    return p;
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    throw ConfigError("unknown output format '" + std::string(text) + "' (expected json or csv)");
}

void apply_config_json(std::string_view text, RunConfig& config, const std::filesystem::path& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    SearchConfig& s = config.search;
    for (const auto& [key, v] : j.items()) {
        if (key == "domain_r") config.paths.domain_robot = resolve(v, key, base_dir);
        else if (key == "domain_h") config.paths.domain_human = resolve(v, key, base_dir);
        else if (key == "problem") config.paths.problem = resolve(v, key, base_dir);
        else if (key == "sensors") config.paths.sensors = resolve(v, key, base_dir);
        else if (key == "name") config.name = get_as<std::string>(v, key);
        else if (key == "alpha") s.alpha = to_rational(v, key);
        else if (key == "budget") s.budget = get_as<int>(v, key);
        else if (key == "iterations") s.iterations = get_as<int>(v, key);
        else if (key == "beta") s.reward = get_as<double>(v, key);
        else if (key == "phi") s.failure_cost = get_as<double>(v, key);
        else if (key == "exploration") s.exploration = get_as<double>(v, key);
        else if (key == "uct_epsilon") s.uct_epsilon = get_as<double>(v, key);
        else if (key == "backprop_cost_scale") s.backprop_cost_scale = get_as<double>(v, key);
        else if (key == "n_best") s.n_best = get_as<int>(v, key);
        else if (key == "seed") s.seed = get_as<std::uint64_t>(v, key);
        else if (key == "count_observable_only") s.count_observable_only = get_as<bool>(v, key);
        else if (key == "uct_global_count") s.uct_global_count = get_as<bool>(v, key);
        else if (key == "node_budget") config.planner.node_budget = get_as<std::size_t>(v, key);
        else if (key == "belief_cap") config.load.belief_cap = get_as<std::size_t>(v, key);
        else if (key == "format") config.format = parse_format(get_as<std::string>(v, key));
        else if (key == "oracle") config.oracle = get_as<bool>(v, key);
        else if (key == "oracle_depth") config.oracle_depth = get_as<int>(v, key);
        else throw ConfigError("unknown config key '" + key + "'");
    }
}

void apply_config_file(const std::filesystem::path& path, RunConfig& config) {
    std::string text;
    try {
        text = pddl::read_text_file(path);
    } catch (const std::exception& e) {
        throw ConfigError("cannot read config " + path.string() + ": " + e.what());
    }
    apply_config_json(text, config, path.parent_path());
}

std::optional<std::filesystem::path> env_config_path() {
    const char* v = std::getenv(kConfigEnv);
    if (!v || !*v) return std::nullopt;
    return std::filesystem::path(v);
}

}  // namespace macopp::bench
