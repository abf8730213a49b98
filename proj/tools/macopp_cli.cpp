// Command-line front end: plan one MA-COPP instance, or write a random one.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "macopp/bench/config.hpp"
#include "macopp/bench/instances.hpp"
#include "macopp/bench/report.hpp"
#include "macopp/bench/run.hpp"
#include "macopp/pddl/sexpr.hpp"

namespace {

struct PlanFlags {
    std::optional<std::string> config, domain_r, domain_h, problem, sensors, name, alpha, format, dump_tree;
    std::optional<int> budget, iterations, n_best, oracle_depth;
    std::optional<double> beta, phi, exploration;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> node_budget;
    bool count_observable_only = false;
    bool uct_global_count = false;
    bool oracle = false;
    bool no_header = false;
};

macopp::bench::RunConfig build_config(const PlanFlags& f) {
    using namespace macopp;
    bench::RunConfig c;
    if (auto env = bench::env_config_path()) bench::apply_config_file(*env, c);
    if (f.config) bench::apply_config_file(*f.config, c);
    if (f.domain_r) c.paths.domain_robot = *f.domain_r;
    if (f.domain_h) c.paths.domain_human = *f.domain_h;
    if (f.problem) c.paths.problem = *f.problem;
    if (f.sensors) c.paths.sensors = *f.sensors;
    if (f.name) c.name = *f.name;
    if (f.alpha) {
        try {
            c.search.alpha = Rational::parse(*f.alpha);
        } catch (const std::exception&) {
            throw bench::ConfigError("--alpha expects a number such as 0.5 or 1/3, got '" + *f.alpha + "'");
        }
    }
    if (f.budget) c.search.budget = *f.budget;
    if (f.iterations) c.search.iterations = *f.iterations;
    if (f.beta) c.search.reward = *f.beta;
    if (f.phi) c.search.failure_cost = *f.phi;
    if (f.exploration) c.search.exploration = *f.exploration;
    if (f.n_best) c.search.n_best = *f.n_best;
    if (f.seed) c.search.seed = *f.seed;
    if (f.count_observable_only) c.search.count_observable_only = true;
    if (f.uct_global_count) c.search.uct_global_count = true;
    if (f.node_budget) c.planner.node_budget = *f.node_budget;
    if (f.format) c.format = bench::parse_format(*f.format);
    if (f.oracle) c.oracle = true;
    if (f.oracle_depth) c.oracle_depth = *f.oracle_depth;
    if (f.dump_tree) c.dump_tree = *f.dump_tree;

    const std::pair<const char*, const std::filesystem::path*> required[] = {
        {"--domain-r", &c.paths.domain_robot},
        {"--domain-h", &c.paths.domain_human},
        {"--problem", &c.paths.problem},
        {"--sensors", &c.paths.sensors}};
    for (const auto& [flag, path] : required)
        if (path->empty()) throw bench::ConfigError(std::string(flag) + " is required (flag or config file)");
    c.search.validate();
    return c;
}

int run_plan(const PlanFlags& flags) {
    using namespace macopp;
    bench::RunConfig config = build_config(flags);
    MaCoppProblem problem;
    bench::RunResult result = bench::run(config, &problem);
    if (config.format == bench::OutputFormat::Csv) {
        if (!flags.no_header) std::cout << bench::csv_header() << '\n';
        std::cout << bench::csv_row(result) << '\n';
    } else {
        std::cout << bench::render_json(bench::report_json(result, problem, config.search));
    }
    return bench::exit_code(result.status);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw macopp::Error("cannot write " + path.string());
    out << text;
}

int run_generate(std::uint64_t seed, const std::string& dir) {
    auto src = macopp::bench::random_instance(seed);
    std::filesystem::create_directories(dir);
    std::filesystem::path d = dir;
    write_file(d / "domain-r.pddl", src.domain_robot);
    write_file(d / "domain-h.pddl", src.domain_human);
    write_file(d / "problem.pddl", src.problem);
    write_file(d / "sensors.txt", src.sensors);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Belief-shaping assistance planner"};
    app.require_subcommand(1);

    PlanFlags f;
    CLI::App* plan = app.add_subcommand("plan", "Search for a robot prefix that shortens the human's plan");
    plan->add_option("--config", f.config, "JSON config file (applied after $MACOPP_CONFIG)");
    plan->add_option("--domain-r", f.domain_r, "Robot's domain file");
    plan->add_option("--domain-h", f.domain_h, "Human's domain file");
    plan->add_option("--problem", f.problem, "Problem file");
    plan->add_option("--sensors", f.sensors, "Sensor model file");
    plan->add_option("--name", f.name, "Label used in reports");
    plan->add_option("--alpha", f.alpha, "Objective weight on k, e.g. 0.5 or 1/3");
    plan->add_option("--budget", f.budget, "L: prefix must be shorter than this");
    plan->add_option("--iterations", f.iterations, "m: MCTS iterations");
    plan->add_option("--beta", f.beta, "Reward for a successful simulation");
    plan->add_option("--phi", f.phi, "Cost charged to a failed simulation");
    plan->add_option("--exploration", f.exploration, "UCT exploration constant");
    plan->add_option("--n-best", f.n_best, "Children kept per node during extraction");
    plan->add_option("--seed", f.seed, "Seed for the expansion order");
    plan->add_flag("--count-observable-only", f.count_observable_only, "k counts only non-null robot steps");
    plan->add_flag("--uct-global-count", f.uct_global_count, "Use the global iteration count in UCT");
    plan->add_option("--node-budget", f.node_budget, "Conformant planner expansion limit");
    plan->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    plan->add_flag("--oracle", f.oracle, "Cross-check against exhaustive enumeration");
    plan->add_option("--oracle-depth", f.oracle_depth, "Enumeration depth for --oracle (default L-1)");
    plan->add_option("--dump-tree", f.dump_tree, "Write the utility tree as JSON");
    plan->add_flag("--no-header", f.no_header, "Omit the CSV header line");

    std::uint64_t gen_seed = 0;
    std::string gen_dir;
    CLI::App* gen = app.add_subcommand("generate", "Write a seeded random instance");
    gen->add_option("--seed", gen_seed, "Instance seed");
    gen->add_option("--out", gen_dir, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*plan) return run_plan(f);
        return run_generate(gen_seed, gen_dir);
    } catch (const macopp::pddl::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return 1;
}
