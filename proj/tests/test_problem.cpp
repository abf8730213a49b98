#include <doctest.h>

#include <set>
#include <string>

#include "macopp/core/errors.hpp"
#include "macopp/pddl/problem.hpp"

using namespace macopp;
using namespace macopp::pddl;

namespace {

DomainDef rooms_domain() {
    return parse_domain(R"((define (domain rooms) (:types loc)
        (:predicates (at ?l - loc) (medkit-at ?l - loc) (door-open ?l - loc) (light-on ?l - loc) (adj ?a ?b - loc))))");
}

std::string problem(const std::string& init, const std::string& extra = "") {
    return "(define (problem p) (:domain rooms) (:objects rooma roomb roomc roomd roome - loc) (:init " + init + ") " +
           extra + " (:goal (at rooma)))";
}

std::string error_of(const std::string& text) {
    try {
        parse_problem(text, rooms_domain());
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("oneof groups are preserved") {
    ProblemDef p = parse_problem(problem("(at rooma) (oneof (medkit-at rooma) (medkit-at roomb))",
                                         "(:true-init (medkit-at roomb))"),
                                 rooms_domain());
    CHECK(p.name == "p");
    CHECK(p.domain == "rooms");
    CHECK(p.objects.size() == 5);
    REQUIRE(p.init.oneof_groups.size() == 1);
    CHECK(p.init.oneof_groups[0].size() == 2);
    CHECK(p.init.oneof_groups[0][1].str() == "(medkit-at roomb)");
    CHECK(p.init.known.size() == 1);
    CHECK(p.true_init.size() == 1);
    CHECK(p.goal.size() == 1);
}

TEST_CASE("known fluents only give a singleton initial belief") {
    ProblemDef p = parse_problem(problem("(at rooma) (known (door-open roomb))"), rooms_domain());
    CHECK(p.init.known.size() == 2);
    FluentTable t;
    Belief b = expand_initial_belief(p.init, t);
    CHECK(b.is_singleton());
    CHECK(b.contains(designated_initial_state(p, t)));
}

TEST_CASE("an unknown fluent branches two ways") {
    ProblemDef p = parse_problem(problem("(at rooma) (unknown (door-open roomc))", "(:true-init (door-open roomc))"),
                                 rooms_domain());
    CHECK(p.init.unknown.size() == 1);
    CHECK(p.init.expansion_count() == 2);
    FluentTable t;
    Belief b = expand_initial_belief(p.init, t);
    CHECK(b.size() == 2);
    FluentId open = *t.find({"door-open", {"roomc"}});
    CHECK(b.states()[0].holds(open) != b.states()[1].holds(open));
    CHECK(b.contains(designated_initial_state(p, t)));
}

TEST_CASE("a five-way oneof gives five initial states") {
    ProblemDef p = parse_problem(problem("(oneof (medkit-at rooma) (medkit-at roomb) (medkit-at roomc) "
                                         "(medkit-at roomd) (medkit-at roome))",
                                         "(:true-init (medkit-at roomb))"),
                                 rooms_domain());
    FluentTable t;
    CHECK(expand_initial_belief(p.init, t).size() == 5);
}

TEST_CASE("independent groups multiply") {
    ProblemDef p = parse_problem(problem("(oneof (medkit-at rooma) (medkit-at roomb)) "
                                         "(oneof (light-on rooma) (light-on roomb) (light-on roomc))",
                                         "(:true-init (medkit-at rooma) (light-on roomc))"),
                                 rooms_domain());
    CHECK(p.init.expansion_count() == 6);
    FluentTable t;
    Belief b = expand_initial_belief(p.init, t);
    CHECK(b.size() == 6);
    // Every combination appears exactly once.
    std::set<std::pair<std::string, std::string>> combos;
    for (const auto& s : b.states()) {
        std::string kit, light;
        for (FluentId f : s.fluents()) {
            const Fluent& fl = t.at(f);
            if (fl.name == "medkit-at") kit = fl.args[0];
            if (fl.name == "light-on") light = fl.args[0];
        }
        combos.emplace(kit, light);
    }
    CHECK(combos.size() == 6);
}

TEST_CASE("expansion count with unknowns and groups, before duplicate removal") {
    // (door-open roomb) is both unknown and implied by nothing else: 2^2 * 2 * 3 = 24.
    ProblemDef p = parse_problem(problem("(unknown (door-open roomb)) (unknown (door-open roomc)) "
                                         "(oneof (medkit-at rooma) (medkit-at roomb)) "
                                         "(oneof (light-on rooma) (light-on roomb) (light-on roomc))",
                                         "(:true-init (medkit-at rooma) (light-on roomc))"),
                                 rooms_domain());
    CHECK(p.init.expansion_count() == 24);
    FluentTable t;
    CHECK(enumerate_initial_states(p.init, t).size() == 24);
    CHECK(expand_initial_belief(p.init, t).size() == 24);
}

TEST_CASE("expansion past the cap is a resource error") {
    ProblemDef p = parse_problem(problem("(unknown (door-open rooma)) (unknown (door-open roomb)) "
                                         "(unknown (door-open roomc))",
                                         "(:true-init)"),
                                 rooms_domain());
    FluentTable t;
    CHECK_THROWS_AS(expand_initial_belief(p.init, t, 7), ResourceLimit);
    CHECK(expand_initial_belief(p.init, t, 8).size() == 8);
}

TEST_CASE("problem errors") {
    CHECK(error_of("(define (problem p) (:domain rooms) (:objects x - room) (:init) (:goal (at x)))")
              .find("unknown object type 'room'") != std::string::npos);
    CHECK(error_of("(define (problem p) (:domain rooms) (:objects x - loc) (:init) (:goal (carrying x)))")
              .find("undeclared predicate 'carrying'") != std::string::npos);
    CHECK(error_of(problem("(at roomz)")).find("unknown object 'roomz'") != std::string::npos);
    CHECK(error_of(problem("(at rooma roomb)")).find("arity mismatch") != std::string::npos);
    CHECK(error_of(problem("(oneof (at rooma))")).find("at least two") != std::string::npos);
    CHECK(error_of(problem("(oneof (at rooma) (at rooma))")).find("repeats") != std::string::npos);
    CHECK(error_of(problem("(at rooma) (unknown (at rooma))")).find("both known and uncertain") !=
          std::string::npos);
    CHECK(error_of(problem("(oneof (at rooma) (at roomb))")).find(":true-init must designate") != std::string::npos);
    CHECK(error_of(problem("(oneof (at rooma) (at roomb))", "(:true-init (at rooma) (at roomb))"))
              .find("exactly one member") != std::string::npos);
    CHECK(error_of(problem("(oneof (at rooma) (at roomb))", "(:true-init (at roomc))"))
              .find("not declared unknown or oneof") != std::string::npos);
    CHECK(error_of("(define (problem p) (:domain rooms) (:objects a a - loc) (:init) (:goal (at a)))")
              .find("duplicate object") != std::string::npos);
    CHECK(error_of("(define (problem p) (:domain rooms) (:metric minimize) (:goal (and)))")
              .find("unknown problem section") != std::string::npos);
}

TEST_CASE("true initial state combines known and designated fluents") {
    ProblemDef p = parse_problem(problem("(at rooma) (oneof (medkit-at rooma) (medkit-at roomb))",
                                         "(:true-init (medkit-at roomb))"),
                                 rooms_domain());
    FluentTable t;
    WorldState i = designated_initial_state(p, t);
    CHECK(i.fluents().size() == 2);
    CHECK(i.holds(*t.find({"medkit-at", {"roomb"}})));
    CHECK(expand_initial_belief(p.init, t).contains(i));
}
