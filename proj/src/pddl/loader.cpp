#include "macopp/pddl/loader.hpp"

#include <fstream>
#include <sstream>

#include "macopp/pddl/domain.hpp"
#include "macopp/pddl/grounding.hpp"
#include "macopp/pddl/problem.hpp"
#include "macopp/pddl/sensor_file.hpp"

namespace macopp::pddl {

namespace {

enum class Stage { DomainRobot, DomainHuman, Problem, Sensors, Other };

MaCoppProblem load(const ProblemSources& src, const LoadOptions& options, Stage& stage) {
    stage = Stage::DomainRobot;
    DomainDef robot = parse_domain(src.domain_robot, Actor::Robot);
    stage = Stage::DomainHuman;
    DomainDef human = parse_domain(src.domain_human, Actor::Human);
    DomainDef domain = merge_domains(robot, human);
    stage = Stage::Problem;
    ProblemDef problem = parse_problem(src.problem, domain);

    stage = Stage::Other;
    FluentTable table;
    GroundedActions actions = ground(domain, problem, table);
    Belief b0 = expand_initial_belief(problem.init, table, options.belief_cap);
    WorldState initial = designated_initial_state(problem, table);
    std::vector<FluentId> goal;
    for (const auto& f : problem.goal) goal.push_back(table.intern(f));

    stage = Stage::Sensors;
    SensorModel sensor = parse_sensor(src.sensors, domain, actions.robot, actions.human, table);

    stage = Stage::Other;
    MaCoppProblem out{
        .name = problem.name,
        .fluents = std::move(table),
        .human_actions = std::move(actions.human),
        .robot_actions = std::move(actions.robot),
        .initial_state = std::move(initial),
        .initial_belief = std::move(b0),
        .human_goal = std::move(goal),
        .sensor = std::move(sensor),
    };
    out.validate();
    return out;
}

}  // namespace

MaCoppProblem load_problem(const ProblemSources& sources, const LoadOptions& options) {
    Stage stage = Stage::Other;
    return load(sources, options, stage);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ProblemSources read_sources(const ProblemPaths& paths) {
    return {read_text_file(paths.domain_robot), read_text_file(paths.domain_human), read_text_file(paths.problem),
            read_text_file(paths.sensors)};
}

MaCoppProblem load_problem(const ProblemPaths& paths, const LoadOptions& options) {
    ProblemSources sources = read_sources(paths);
    Stage stage = Stage::Other;
    try {
        return load(sources, options, stage);
    } catch (const ParseError& e) {
        std::filesystem::path file;
        switch (stage) {
            case Stage::DomainRobot: file = paths.domain_robot; break;
            case Stage::DomainHuman: file = paths.domain_human; break;
            case Stage::Problem: file = paths.problem; break;
            case Stage::Sensors: file = paths.sensors; break;
            case Stage::Other: throw;
        }
        throw ParseError(file.string(), e.message(), e.pos());
    }
}

}  // namespace macopp::pddl
