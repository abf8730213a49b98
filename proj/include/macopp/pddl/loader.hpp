#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "macopp/core/model.hpp"

namespace macopp::pddl {

struct LoadOptions {
    std::size_t belief_cap = 100'000;
};

struct ProblemSources {
    std::string domain_robot;
    std::string domain_human;
    std::string problem;
    std::string sensors;
};

// Parses all four inputs, grounds them, expands B_0 and validates the result.
MaCoppProblem load_problem(const ProblemSources& sources, const LoadOptions& options = {});

struct ProblemPaths {
    std::filesystem::path domain_robot;
    std::filesystem::path domain_human;
    std::filesystem::path problem;
    std::filesystem::path sensors;
};

ProblemSources read_sources(const ProblemPaths& paths);

// As load_problem, prefixing parse errors with the offending file name.
MaCoppProblem load_problem(const ProblemPaths& paths, const LoadOptions& options = {});

std::string read_text_file(const std::filesystem::path& path);

}  // namespace macopp::pddl
