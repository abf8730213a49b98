#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "macopp/conformant/planner.hpp"
#include "macopp/core/errors.hpp"
#include "macopp/core/model.hpp"
#include "macopp/pddl/loader.hpp"

namespace macopp::bench {

// Environment variable naming a JSON file with default run settings.
inline constexpr const char* kConfigEnv = "MACOPP_CONFIG";

class ConfigError : public Error {
public:
    using Error::Error;
};

enum class OutputFormat { Json, Csv };

struct RunConfig {
    pddl::ProblemPaths paths;
    std::string name;  // report label; defaults to the problem's name
    SearchConfig search;
    conformant::PlannerOptions planner;
    pddl::LoadOptions load;
    OutputFormat format = OutputFormat::Json;
    bool oracle = false;
    std::optional<int> oracle_depth;  // defaults to budget − 1
    std::optional<std::filesystem::path> dump_tree;
};

// Overlays the keys of a JSON object onto `config`. Unknown keys are rejected.
// Relative paths are resolved against `base_dir`.
void apply_config_json(std::string_view text, RunConfig& config, const std::filesystem::path& base_dir = {});

void apply_config_file(const std::filesystem::path& path, RunConfig& config);

// The file named by MACOPP_CONFIG, if set and non-empty.
std::optional<std::filesystem::path> env_config_path();

OutputFormat parse_format(std::string_view text);

}  // namespace macopp::bench
