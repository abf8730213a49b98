#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "macopp/pddl/loader.hpp"

namespace macopp::bench {

// data/<name>/{domain-r,domain-h,problem}.pddl plus the given sensor file.
pddl::ProblemPaths bundled_paths(const std::filesystem::path& data_dir, const std::string& name,
                                 const std::string& sensors = "sensors.txt");

// Instances small enough for exhaustive enumeration.
std::vector<std::string> small_instance_names();

// Bundled domains used by the trajectory checks.
std::vector<std::string> bundled_domain_names();

// A seeded search-and-fetch instance: 2–4 rooms around a hallway, an item
// hidden in one of several rooms, a robot that can look, fetch and drop it,
// and sensor rules drawn at random between legible and coarse.
pddl::ProblemSources random_instance(std::uint64_t seed);

}  // namespace macopp::bench
