#include <doctest.h>

#include <functional>
#include <set>

#include "macopp/bench/run.hpp"
#include "macopp/core/transition.hpp"
#include "macopp/mcts/joint_plan.hpp"
#include "support.hpp"

using namespace macopp;
using namespace macopp::mcts;

namespace {

struct Best {
    std::optional<Rational> objective;
    std::vector<std::string> labels;
};

// Plain recursion over every robot prefix of length 1..max_depth.
Best brute_force(const MaCoppProblem& p, const Rational& alpha, int max_depth, const Rational& solo) {
    Best best;
    std::vector<std::string> path;
    std::function<void(const WorldState&, const Belief&, int)> walk = [&](const WorldState& s, const Belief& b,
                                                                           int depth) {
        if (depth > 0) {
            auto r = conformant::conformant_plan(b, p.human_goal, p.human_actions);
            if (r.found() && r.plan->cost < solo) {
                Rational obj = alpha * Rational(depth) + (Rational(1) - alpha) * r.plan->cost;
                if (!best.objective || obj < *best.objective || (obj == *best.objective && path < best.labels)) {
                    best.objective = obj;
                    best.labels = path;
                }
            }
        }
        if (depth == max_depth) return;
        for (const auto& a : p.robot_actions) {
            if (!applicable(s, a.body)) continue;
            WorldState next = apply(s, a);
            ObservationId o = p.sensor.observe(a, next);
            Belief nb = belief_update(b, p.robot_actions, o, p.sensor);
            path.push_back(a.label());
            walk(next, nb, depth + 1);
            path.pop_back();
        }
    };
    walk(p.initial_state, p.initial_belief, 0);
    return best;
}

std::vector<std::string> prefix_labels(const MaCoppProblem& p, const JointPlan& plan) {
    std::vector<std::string> out;
    for (const auto& step : plan.robot_prefix) out.push_back(p.robot_actions[step.action].label());
    return out;
}

struct Built {
    MaCoppProblem problem;
    conformant::PlanCache cache;
    std::optional<Rational> solo;
    SearchConfig cfg;
    std::unique_ptr<UtilityTree> tree;

    Built(const std::string& name, SearchConfig config, const std::string& sensors = "sensors.txt")
        : problem(support::load_bundled(name, sensors)),
          cache(problem.human_goal, problem.human_actions),
          solo(bench::solo_baseline(problem, cache)),
          cfg(config) {
        tree = std::make_unique<UtilityTree>(problem, cfg, solo, cache);
        tree->build();
    }
};

SearchConfig exhaustive(int budget, Rational alpha) {
    SearchConfig cfg;
    cfg.budget = budget;
    cfg.alpha = alpha;
    cfg.iterations = 1'000'000;
    cfg.n_best = 1000;
    return cfg;
}

}  // namespace

TEST_CASE("objective value is exact") {
    CHECK(objective_value(Rational(1, 2), 4, Rational(3)) == Rational(7, 2));
    CHECK(objective_value(Rational(0), 4, Rational(3)) == Rational(3));
    CHECK(objective_value(Rational(1), 4, Rational(3)) == Rational(4));
    CHECK(objective_value(Rational(1, 3), 1, Rational(1)) == Rational(1));
}

TEST_CASE("no assistance when the robot cannot communicate anything") {
    Built b("usar", exhaustive(3, Rational(1, 2)), "sensors-all-null.txt");
    CHECK_FALSE(extract_joint_plan(*b.tree).has_value());
}

TEST_CASE("extraction finds the exhaustive optimum") {
    for (Rational alpha : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
        CAPTURE(alpha.str());
        Built b("usar-micro", exhaustive(5, alpha));
        REQUIRE(b.tree->node(b.tree->root()).exhausted);
        auto plan = extract_joint_plan(*b.tree);
        Best expect = brute_force(b.problem, alpha, 4, *b.solo);
        REQUIRE(expect.objective.has_value());
        REQUIRE(plan.has_value());
        CHECK(plan->objective == *expect.objective);
        CHECK(prefix_labels(b.problem, *plan) == expect.labels);
        CHECK(check_constraints(*plan, b.problem, b.cfg.budget).all());
    }
}

TEST_CASE("alpha endpoints") {
    Built zero("usar-micro", exhaustive(5, Rational(0)));
    Built one("usar-micro", exhaustive(5, Rational(1)));
    auto p0 = extract_joint_plan(*zero.tree);
    auto p1 = extract_joint_plan(*one.tree);
    REQUIRE(p0);
    REQUIRE(p1);
    CHECK(p0->objective == p0->suffix_cost);
    CHECK(p1->objective == Rational(p1->k));
    // Pure suffix cost never loses on suffix cost; pure prefix length never loses on k.
    CHECK(p0->suffix_cost <= p1->suffix_cost);
    CHECK(p1->k <= p0->k);
}

TEST_CASE("joint plan fields are consistent") {
    Built b("usar", [] {
        SearchConfig cfg;
        cfg.iterations = 3000;
        return cfg;
    }());
    auto plan = extract_joint_plan(*b.tree);
    REQUIRE(plan);
    CHECK(plan->k == static_cast<int>(plan->robot_prefix.size()));
    CHECK(plan->total_steps == static_cast<int>(plan->robot_prefix.size() + plan->human_suffix.steps.size()));
    CHECK(plan->suffix_cost == conformant::plan_cost(plan->human_suffix.steps, b.problem.human_actions));
    CHECK(*plan->cost_differential == plan->suffix_cost - *b.solo);
    CHECK(*plan->cost_differential < Rational(0));
    CHECK(plan->objective == objective_value(b.cfg.alpha, plan->k, plan->suffix_cost));
    CHECK(plan->robot_prefix.back().belief_size == b.tree->node(plan->node).belief.size());
    CHECK(check_constraints(*plan, b.problem, b.cfg.budget).all());
}

TEST_CASE("constraint checks catch broken plans") {
    Built b("usar-micro", exhaustive(5, Rational(1, 2)));
    auto plan = extract_joint_plan(*b.tree);
    REQUIRE(plan);
    REQUIRE(!plan->human_suffix.steps.empty());

    JointPlan shorter = *plan;
    shorter.human_suffix.steps.pop_back();
    CHECK_FALSE(check_constraints(shorter, b.problem, b.cfg.budget).suffix_is_optimal);

    CHECK_FALSE(check_constraints(*plan, b.problem, plan->k).within_budget);

    JointPlan no_help = *plan;
    no_help.robot_prefix.clear();
    auto solo = conformant::conformant_plan(b.problem.initial_belief, b.problem.human_goal, b.problem.human_actions);
    no_help.human_suffix = *solo.plan;
    auto check = check_constraints(no_help, b.problem, b.cfg.budget);
    CHECK(check.suffix_is_optimal);
    CHECK_FALSE(check.cost_differential_negative);
}

TEST_CASE("the n-best restriction keeps the top simulated children") {
    SearchConfig cfg;
    cfg.iterations = 2000;
    cfg.n_best = 2;
    Built b("usar", cfg);
    auto kept = restricted_nodes(*b.tree, cfg.n_best);
    std::set<NodeId> set(kept.begin(), kept.end());
    CHECK(kept.front() == b.tree->root());
    for (NodeId id : kept) {
        const auto& n = b.tree->node(id);
        std::vector<NodeId> sim_children;
        for (NodeId c : n.children)
            if (b.tree->node(c).sim) sim_children.push_back(c);
        std::vector<NodeId> kept_children;
        for (NodeId c : n.children)
            if (set.count(c)) kept_children.push_back(c);
        CHECK(kept_children.size() == std::min<std::size_t>(2, sim_children.size()));
        // No dropped child beats a kept one.
        for (NodeId k : kept_children)
            for (NodeId c : sim_children) {
                if (set.count(c)) continue;
                const auto& nk = b.tree->node(k);
                const auto& nc = b.tree->node(c);
                CHECK((nk.utility > nc.utility || (nk.utility == nc.utility && nk.visits >= nc.visits)));
            }
    }
    for (NodeId id : kept)
        if (id != b.tree->root()) CHECK(set.count(*b.tree->node(id).parent));
}
