#include "macopp/bench/instances.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace macopp::bench {

pddl::ProblemPaths bundled_paths(const std::filesystem::path& data_dir, const std::string& name,
                                 const std::string& sensors) {
    std::filesystem::path dir = data_dir / name;
    return {dir / "domain-r.pddl", dir / "domain-h.pddl", dir / "problem.pddl", dir / sensors};
}

std::vector<std::string> small_instance_names() {
    return {"usar-micro", "usar-report", "driverlog-mini", "vault", "kitchen"};
}

std::vector<std::string> bundled_domain_names() {
    return {"usar", "driverlog", "usar-micro", "usar-report", "driverlog-mini", "vault", "kitchen"};
}

namespace {

const char* kPredicates = R"(  (:predicates (robot-at ?r - room) (human-at ?r - room) (adj ?a - room ?b - room)
               (item-at ?r - room) (carrying) (has-item))
)";

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(std::mt19937_64& rng) { return pick(rng, 0, 1) == 1; }

}  // namespace

pddl::ProblemSources random_instance(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int rooms = pick(rng, 2, 4);
    std::vector<std::string> names;
    for (int i = 1; i <= rooms; ++i) names.push_back("r" + std::to_string(i));
    std::vector<std::string> places = names;
    places.push_back("hall");

    std::ostringstream r;
    r << "(define (domain fetch)\n  (:types room)\n" << kPredicates;
    r << R"(  (:action move-r :parameters (?from - room ?to - room)
    :precondition (and (robot-at ?from) (adj ?from ?to))
    :effect (and (robot-at ?to) (not (robot-at ?from))))
  (:action look :parameters (?r - room) :precondition (robot-at ?r) :effect (and))
  (:action fetch :parameters (?r - room)
    :precondition (and (robot-at ?r) (item-at ?r))
    :effect (and (carrying) (not (item-at ?r))))
  (:action fetch :belief :parameters (?r - room)
    :precondition (robot-at ?r)
    :effect (and (when (item-at ?r) (and (carrying) (not (item-at ?r))))))
  (:action drop :parameters (?r - room)
    :precondition (and (robot-at ?r) (carrying))
    :effect (and (item-at ?r) (not (carrying))))
  (:action wait :parameters () :effect (and)))
)";

    int move_cost = pick(rng, 1, 2);
    int search_cost = pick(rng, 1, 3);
    std::ostringstream h;
    h << "(define (domain fetch)\n  (:types room)\n" << kPredicates;
    h << "  (:action move-h :parameters (?from - room ?to - room)\n"
         "    :precondition (and (human-at ?from) (adj ?from ?to))\n"
         "    :effect (and (human-at ?to) (not (human-at ?from)))\n"
         "    :cost " << move_cost << ")\n";
    h << "  (:action search :parameters (?r - room)\n"
         "    :precondition (human-at ?r)\n"
         "    :effect (and (when (item-at ?r) (and (has-item))))\n"
         "    :cost " << search_cost << "))\n";

    // The item hides in at least two of the rooms.
    std::vector<std::string> candidates = names;
    std::shuffle(candidates.begin(), candidates.end(), rng);
    candidates.resize(static_cast<std::size_t>(pick(rng, 2, rooms)));
    std::sort(candidates.begin(), candidates.end());
    const std::string& truth = candidates[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(candidates.size()) - 1))];
    const std::string& robot_start = places[static_cast<std::size_t>(pick(rng, 0, rooms))];

    std::ostringstream p;
    p << "(define (problem fetch-" << seed << ")\n  (:domain fetch)\n  (:objects";
    for (const auto& n : places) p << ' ' << n;
    p << " - room)\n  (:init (robot-at " << robot_start << ") (human-at hall)\n";
    for (const auto& n : names) p << "    (adj hall " << n << ") (adj " << n << " hall)\n";
    p << "    (oneof";
    for (const auto& c : candidates) p << " (item-at " << c << ")";
    p << "))\n  (:true-init (item-at " << truth << "))\n  (:goal (has-item)))\n";

    std::ostringstream s;
    s << "(default nothing null)\n";
    if (coin(rng)) {
        for (const auto& n : places) s << "(rule move-r (args _ " << n << ") robot-in-" << n << ")\n";
    } else {
        s << "(rule move-r robot-moved)\n";
    }
    switch (pick(rng, 0, 2)) {
    case 0:
        s << "(rule look (condition (item-at ?r)) item-seen)\n(rule look no-item)\n";
        break;
    case 1:
        s << "(rule look robot-busy)\n";
        break;
    default:
        break;  // look stays silent
    }
    if (coin(rng)) s << "(rule fetch (condition (carrying)) got-item)\n";
    s << "(rule fetch robot-busy)\n";
    if (coin(rng)) {
        for (const auto& n : places) s << "(rule drop (args " << n << ") dropped-in-" << n << ")\n";
    } else {
        s << "(rule drop robot-busy)\n";
    }
    return {r.str(), h.str(), p.str(), s.str()};
}

}  // namespace macopp::bench
