#include <doctest.h>

#include <set>
#include <string>

#include "macopp/pddl/grounding.hpp"
#include "macopp/pddl/problem.hpp"

using namespace macopp;
using namespace macopp::pddl;

namespace {

const char* kDomain = R"((define (domain g) (:types loc item)
  (:predicates (at ?l - loc) (adj ?a - loc ?b - loc) (holding ?i - item) (lit))
  (:action move :parameters (?a - loc ?b - loc)
    :precondition (and (at ?a) (adj ?a ?b)) :effect (and (at ?b) (not (at ?a))))
  (:action grab :parameters (?i - item) :precondition (and) :effect (and (holding ?i)))
  (:action toggle :parameters () :effect (and (lit)))))";

struct Grounded {
    DomainDef domain;
    ProblemDef problem;
    FluentTable table;
    GroundedActions actions;
};

Grounded ground_text(const std::string& objects, const std::string& init) {
    Grounded g;
    g.domain = parse_domain(kDomain);
    g.problem = parse_problem("(define (problem p) (:domain g) (:objects " + objects + ") (:init " + init +
                                  ") (:goal (lit)))",
                              g.domain);
    g.actions = ground(g.domain, g.problem, g.table);
    return g;
}

std::size_t count_named(const std::vector<GroundAction>& actions, const std::string& name) {
    std::size_t n = 0;
    for (const auto& a : actions) n += a.name == name;
    return n;
}

}  // namespace

TEST_CASE("static predicates") {
    auto s = static_predicates(parse_domain(kDomain));
    CHECK(s == std::set<std::string>{"adj"});
}

TEST_CASE("only adjacent moves survive static pruning") {
    // A ring of six locations.
    std::vector<std::string> locs{"l0", "l1", "l2", "l3", "l4", "l5"};
    std::string init = "(at l0)";
    std::set<std::pair<std::string, std::string>> adj;
    for (std::size_t i = 0; i < locs.size(); ++i) {
        const auto& a = locs[i];
        const auto& b = locs[(i + 1) % locs.size()];
        init += " (adj " + a + " " + b + ") (adj " + b + " " + a + ")";
        adj.emplace(a, b);
        adj.emplace(b, a);
    }
    Grounded g = ground_text("l0 l1 l2 l3 l4 l5 - loc key - item", init);
    // Unpruned: 6*6 moves + 1 grab + 1 toggle.
    CHECK(g.actions.candidate_count == 36 + 1 + 1);
    std::size_t violated = 0;
    for (const auto& a : locs)
        for (const auto& b : locs) violated += !adj.count({a, b});
    CHECK(count_named(g.actions.robot, "move") == 36 - violated);
    for (const auto& a : g.actions.robot)
        if (a.name == "move") CHECK(adj.count({a.args[0], a.args[1]}) == 1);
}

TEST_CASE("no objects of a parameter type means no instances") {
    Grounded g = ground_text("l0 l1 - loc", "(at l0) (adj l0 l1)");
    CHECK(count_named(g.actions.robot, "grab") == 0);
}

TEST_CASE("a parameterless schema grounds exactly once") {
    Grounded g = ground_text("l0 - loc", "(at l0)");
    CHECK(count_named(g.actions.robot, "toggle") == 1);
    CHECK(count_named(g.actions.robot, "move") == 0);
}

TEST_CASE("ground fluents are well-typed instances of declared predicates") {
    Grounded g = ground_text("l0 l1 l2 - loc key cup - item", "(at l0) (adj l0 l1) (adj l1 l2) (adj l2 l0)");
    std::set<std::string> locs{"l0", "l1", "l2"}, items{"key", "cup"};
    auto check = [&](FluentId id) {
        const Fluent& f = g.table.at(id);
        const PredicateDecl* p = g.domain.predicate(f.name);
        REQUIRE(p);
        REQUIRE(p->params.size() == f.args.size());
        for (std::size_t i = 0; i < f.args.size(); ++i) {
            const auto& pool = p->params[i].type == "loc" ? locs : items;
            CHECK(pool.count(f.args[i]) == 1);
        }
    };
    for (const auto& a : g.actions.robot) {
        for (auto* list : {&a.body.pre, &a.body.add, &a.body.del})
            for (FluentId f : *list) check(f);
    }
}

TEST_CASE("base and belief definitions ground onto one action") {
    DomainDef d = parse_domain(R"((define (domain b) (:types loc)
      (:predicates (at ?l - loc) (kit ?l - loc) (has))
      (:action pick :parameters (?l - loc) :precondition (and (at ?l) (kit ?l)) :effect (and (has) (not (kit ?l))))
      (:action pick :belief :parameters (?l - loc) :precondition (at ?l)
        :effect (and (when (kit ?l) (and (has) (not (kit ?l))))))))");
    ProblemDef p = parse_problem("(define (problem p) (:domain b) (:objects x y - loc) (:init (at x) "
                                 "(oneof (kit x) (kit y))) (:true-init (kit x)) (:goal (has)))",
                                 d);
    FluentTable t;
    GroundedActions g = ground(d, p, t);
    // (at ?l) is static, so only (pick x) survives grounding.
    REQUIRE(g.robot.size() == 1);
    CHECK(g.robot[0].label() == "(pick x)");
    for (const auto& a : g.robot) {
        REQUIRE(a.belief.has_value());
        CHECK(a.body.pre.size() == 2);
        CHECK(a.belief->pre.size() == 1);
        CHECK(a.belief->when.size() == 1);
        CHECK(&a.belief_body() == &*a.belief);
    }
}

TEST_CASE("human and robot actions land in separate sets") {
    DomainDef d = parse_domain(R"((define (domain h) (:predicates (p))
      (:action r :parameters () :effect (and (p)))
      (:action h :actor human :parameters () :effect (and (p)) :cost 3)))");
    ProblemDef p = parse_problem("(define (problem p) (:domain h) (:init) (:goal (p)))", d);
    FluentTable t;
    GroundedActions g = ground(d, p, t);
    REQUIRE(g.robot.size() == 1);
    REQUIRE(g.human.size() == 1);
    CHECK(g.human[0].actor == Actor::Human);
    CHECK(g.human[0].cost == Rational(3));
    CHECK(g.human[0].label() == "(h)");
}
