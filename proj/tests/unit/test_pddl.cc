#include "doctest.h"

#include "scoper/pddl/grounder.h"
#include "scoper/pddl/parser.h"
#include "scoper/pddl/writer.h"
#include "scoper/scoping.h"
#include "support/playroom_gen.h"

#include <algorithm>
#include <fstream>
#include <sstream>

using namespace scoper;
using namespace scoper::pddl;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing fixture: " << path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string fixture(const std::string& name) {
    return read_file(std::string(FIXTURE_DIR) + "/" + name);
}

std::set<std::string> fluent_names(const PlanningProblem& pp) {
    std::set<std::string> names;
    for (const Fluent& f : pp.fluents())
        names.insert(f.name);
    return names;
}

std::set<std::string> names_of(const PlanningProblem& pp,
                               const std::vector<FluentId>& ids) {
    std::set<std::string> names;
    for (FluentId f : ids)
        names.insert(pp.fluent(f).name);
    return names;
}

// Canonical description of a problem, stable under fluent/action reordering:
// used for the grounding round-trip isomorphism check.
std::multiset<std::string> canonical_transitions(const PlanningProblem& pp) {
    auto name = [&](FluentId f) { return pp.fluent(f).name; };
    std::multiset<std::string> out;
    for (const CaeTriple& t : pp.transitions()) {
        std::string desc = pp.action_name(t.action) + " | cost " +
                           to_string(t.cost) + " | ";
        Cnf cnf = to_cnf(t.precondition, 1 << 14);
        std::vector<std::string> clauses;
        for (const Clause& c : cnf.clauses)
            clauses.push_back(c.to_string(name));
        std::sort(clauses.begin(), clauses.end());
        for (const std::string& c : clauses)
            desc += c + " ";
        desc += "| ";
        for (const auto& [f, e] : t.effects)
            desc += name(f) + " " + e.to_string(name) + "; ";
        out.insert(std::move(desc));
    }
    return out;
}

bool isomorphic(const PlanningProblem& a, const PlanningProblem& b) {
    if (fluent_names(a) != fluent_names(b))
        return false;
    std::map<std::string, Value> init_a, init_b;
    for (FluentId f = 0; f < a.num_fluents(); ++f)
        init_a.emplace(a.fluent(f).name, a.initial_state().at(f));
    for (FluentId f = 0; f < b.num_fluents(); ++f)
        init_b.emplace(b.fluent(f).name, b.initial_state().at(f));
    if (init_a != init_b)
        return false;
    return canonical_transitions(a) == canonical_transitions(b);
}

}  // namespace

TEST_CASE("minimal domain with one action and one predicate") {
    Domain domain = parse_domain(
        "(define (domain mini) (:requirements :strips)"
        " (:predicates (p))"
        " (:action set-p :parameters () :effect (p)))");
    CHECK(domain.actions.size() == 1);
    CHECK(domain.predicates.size() == 1);

    Problem problem = parse_problem(
        "(define (problem mini-1) (:domain mini) (:init) (:goal (p)))");
    GroundedTask task = ground(domain, problem);
    CHECK(task.problem.num_actions() == 1);  // zero parameters, one grounding
    CHECK(task.problem.num_fluents() == 1);
    CHECK(task.problem.action_name(0) == "(set-p)");
}

TEST_CASE("playroom domain parses with movement schemas") {
    Domain domain = parse_domain(fixture("playroom-thermo-domain.pddl"));
    std::set<std::string> names;
    for (const ActionSchema& a : domain.actions)
        names.insert(a.name);
    CHECK(names.count("move-north"));
    CHECK(names.count("move-north-flick"));
    CHECK(names.count("throw-ball"));
    CHECK(domain.functions.size() == 5);
}

TEST_CASE("unsupported constructs are rejected, not dropped") {
    CHECK_THROWS_AS(parse_domain("(define (domain d) (:requirements :strips"
                                 " :durative-actions))"),
                    UnsupportedFeatureError);
    CHECK_THROWS_AS(
        parse_domain("(define (domain d) (:predicates (p) (q))"
                     " (:action a :parameters ()"
                     "  :effect (when (p) (q))))"),
        UnsupportedFeatureError);
    CHECK_THROWS_AS(parse_domain("(define (domain d) (:derived (p) (q)))"),
                    UnsupportedFeatureError);
    CHECK_THROWS_AS(parse_domain("(define (domain d"), ParseError);
    CHECK_THROWS_AS(parse_problem("(define (problem p) (:domain d) (:init))"),
                    ParseError);  // no goal
}

TEST_CASE("grounding substitutes typed objects and folds statics") {
    Domain domain = parse_domain(fixture("playroom-thermo-domain.pddl"));
    Problem problem = parse_problem(fixture("playroom-thermo-problem.pddl"));
    GroundedTask task = ground(domain, problem);

    // Grounded fluents include the per-effector coordinates.
    CHECK(task.problem.fluent_id("(y hand1)").has_value());
    CHECK(task.problem.fluent_id("(music-on)").has_value());
    // Static selector predicates are folded away entirely.
    CHECK_FALSE(task.problem.fluent_id("(is-eye eye1)").has_value());

    // turn-on-lights has 3x3 eye/hand candidate pairs, but only the real
    // eye/hand pair survives the static fold.
    int turn_on_groundings = 0;
    for (const std::string& name : task.problem.action_names())
        if (name.rfind("(turn-on-lights ", 0) == 0)
            ++turn_on_groundings;
    CHECK(turn_on_groundings == 1);

    // Movement grounds per effector and thermostat.
    CHECK(task.problem.action_id("(move-north hand1 thermo1)").has_value());
    CHECK(task.problem.action_id("(throw-ball eye1 hand1 marker1 ball1 bell1 "
                                 "monkey1)")
              .has_value());
}

TEST_CASE("universal precondition expands to a conjunction over objects") {
    Domain domain = parse_domain(
        "(define (domain all) (:requirements :strips :typing"
        " :universal-preconditions)"
        " (:types item - object)"
        " (:predicates (ready ?i - item) (done))"
        " (:action finish :parameters ()"
        "  :precondition (forall (?i - item) (ready ?i))"
        "  :effect (done))"
        " (:action prep :parameters (?i - item) :effect (ready ?i)))");
    Problem problem = parse_problem(
        "(define (problem all-3) (:domain all)"
        " (:objects a b c - item) (:init) (:goal (done)))");
    GroundedTask task = ground(domain, problem);

    auto id = task.problem.action_id("(finish)");
    REQUIRE(id.has_value());
    const CaeTriple* finish = nullptr;
    for (const CaeTriple& t : task.problem.transitions())
        if (t.action == *id)
            finish = &t;
    REQUIRE(finish);
    Cnf cnf = to_cnf(finish->precondition);
    CHECK(cnf.clauses.size() == 3);  // one unit clause per object
    for (const Clause& c : cnf.clauses)
        CHECK(c.literals().size() == 1);
}

TEST_CASE("existential precondition expands to a disjunction") {
    Domain domain = parse_domain(
        "(define (domain anyd) (:requirements :strips :typing"
        " :existential-preconditions)"
        " (:types item - object)"
        " (:predicates (ready ?i - item) (done))"
        " (:action finish :parameters ()"
        "  :precondition (exists (?i - item) (ready ?i))"
        "  :effect (done))"
        " (:action prep :parameters (?i - item) :effect (ready ?i)))");
    Problem problem = parse_problem(
        "(define (problem any-2) (:domain anyd)"
        " (:objects a b - item) (:init (ready b)) (:goal (done)))");
    GroundedTask task = ground(domain, problem);
    const CaeTriple& finish = task.problem.transitions().front();
    Cnf cnf = to_cnf(finish.precondition);
    REQUIRE(cnf.clauses.size() == 1);
    CHECK(cnf.clauses[0].literals().size() == 2);
    CHECK(finish.precondition.eval(task.problem.initial_state()));
}

TEST_CASE("object equality resolves at grounding time") {
    Domain domain = parse_domain(
        "(define (domain eq) (:requirements :strips :typing :equality)"
        " (:types item - object)"
        " (:predicates (marked ?i - item) (done))"
        " (:action mark-other :parameters (?i ?j - item)"
        "  :precondition (not (= ?i ?j))"
        "  :effect (and (marked ?i) (marked ?j))))");
    Problem problem = parse_problem(
        "(define (problem eq-2) (:domain eq)"
        " (:objects a b - item) (:init) (:goal (marked a)))");
    GroundedTask task = ground(domain, problem);
    // (mark-other a a) and (mark-other b b) fold to False and are dropped.
    CHECK(task.problem.num_actions() == 2);
    CHECK(task.problem.action_id("(mark-other a b)").has_value());
    CHECK_FALSE(task.problem.action_id("(mark-other a a)").has_value());
}

TEST_CASE("numeric fluents must be assigned in init when referenced") {
    Domain domain = parse_domain(
        "(define (domain num) (:requirements :strips :fluents)"
        " (:functions (level))"
        " (:predicates (done))"
        " (:action pump :parameters ()"
        "  :precondition (< (level) 5)"
        "  :effect (increase (level) 1)))");
    Problem missing = parse_problem(
        "(define (problem num-1) (:domain num) (:init) (:goal (done)))");
    CHECK_THROWS_AS(ground(domain, missing), InvalidProblemError);

    Problem ok = parse_problem(
        "(define (problem num-2) (:domain num)"
        " (:init (= (level) 0)) (:goal (done)))");
    GroundedTask task = ground(domain, ok);
    CHECK(task.problem.fluent_id("(level)").has_value());
}

TEST_CASE("total-cost increases become action costs under a metric") {
    std::string domain_text =
        "(define (domain costs) (:requirements :strips :action-costs)"
        " (:predicates (done) (primed))"
        " (:functions (total-cost))"
        " (:action direct :parameters ()"
        "  :effect (and (done) (increase (total-cost) 5)))"
        " (:action prime :parameters ()"
        "  :effect (and (primed) (increase (total-cost) 2)))"
        " (:action finish :parameters ()"
        "  :precondition (primed)"
        "  :effect (and (done) (increase (total-cost) 1))))";
    Domain domain = parse_domain(domain_text);

    Problem with_metric = parse_problem(
        "(define (problem c1) (:domain costs)"
        " (:init (= (total-cost) 0)) (:goal (done))"
        " (:metric minimize (total-cost)))");
    GroundedTask task = ground(domain, with_metric);
    CHECK_FALSE(task.problem.fluent_id("(total-cost)").has_value());
    std::map<std::string, Rational> costs;
    for (const CaeTriple& t : task.problem.transitions())
        costs[task.problem.action_name(t.action)] = t.cost;
    CHECK(costs.at("(direct)") == Rational(5));
    CHECK(costs.at("(prime)") == Rational(2));
    CHECK(costs.at("(finish)") == Rational(1));

    // Without a metric the unit-cost convention applies.
    Problem no_metric = parse_problem(
        "(define (problem c2) (:domain costs)"
        " (:init (= (total-cost) 0)) (:goal (done)))");
    GroundedTask unit = ground(domain, no_metric);
    for (const CaeTriple& t : unit.problem.transitions())
        CHECK(t.cost == Rational(1));
}

TEST_CASE("grounding explosion is capped") {
    Domain domain = parse_domain(
        "(define (domain big) (:requirements :strips :typing)"
        " (:types item - object)"
        " (:predicates (linked ?a ?b ?c - item) (done))"
        " (:action link :parameters (?a ?b ?c - item)"
        "  :effect (linked ?a ?b ?c)))");
    Problem problem = parse_problem(
        "(define (problem big-1) (:domain big)"
        " (:objects i1 i2 i3 i4 i5 i6 i7 i8 i9 i10 - item)"
        " (:init) (:goal (done)))");
    GroundOptions options;
    options.max_grounded_actions = 500;
    CHECK_THROWS_AS(ground(domain, problem, options), GroundingExplosionError);
}

TEST_CASE("playroom classification from PDDL text") {
    Domain domain = parse_domain(fixture("playroom-thermo-domain.pddl"));
    Problem problem = parse_problem(fixture("playroom-thermo-problem.pddl"));
    GroundedTask task = ground(domain, problem);

    ScopeResult scope = scope_task(task.problem);

    CHECK(names_of(task.problem, scope.j_rel) ==
          std::set<std::string>{"(x eye1)", "(y eye1)", "(x hand1)", "(y hand1)",
                                "(x marker1)", "(y marker1)", "(fx ball1)",
                                "(fy ball1)", "(fx bell1)", "(fy bell1)",
                                "(frightened monkey1)"});
    CHECK(names_of(task.problem, scope.j_cl) ==
          std::set<std::string>{"(music-on)"});
    CHECK(names_of(task.problem, scope.j_irrel) ==
          std::set<std::string>{"(lights-on switch1)", "(temperature thermo1)",
                                "(fx thermo1)", "(fy thermo1)", "(fx switch1)",
                                "(fy switch1)", "(fx greenb1)", "(fy greenb1)",
                                "(fx redb1)", "(fy redb1)"});

    // 5 movement groundings per effector plus the throw.
    CHECK(scope.retained_actions.size() == 16);

    // Writing this task back would delete thermo1, which a retained movement
    // grounding still names: the emitter must refuse.
    CHECK_THROWS_AS(emit_pddl(domain, problem, task, scope),
                    EmitInconsistencyError);
}

TEST_CASE("emitted playroom drops switch groups and re-parses cleanly") {
    Domain domain = parse_domain(fixture("playroom-domain.pddl"));
    Problem problem = parse_problem(testsupport::playroom_problem(3));
    GroundedTask task = ground(domain, problem);
    ScopeResult scope = scope_task(task.problem);

    EmittedPddl emitted = emit_pddl(domain, problem, task, scope);
    CHECK(emitted.removed_objects ==
          std::vector<std::string>{"greenb1", "greenb2", "greenb3", "redb1",
                                   "redb2", "redb3", "switch1", "switch2",
                                   "switch3"});
    CHECK(emitted.removed_schemas ==
          std::vector<std::string>{"turn-on-lights", "turn-off-lights",
                                   "push-green", "push-red"});

    auto [domain2, problem2] =
        parse_pddl(emitted.domain_text, emitted.problem_text);
    GroundedTask task2 = ground(domain2, problem2);

    // Rescoping the emitted task changes nothing.
    ScopeResult scope2 = scope_task(task2.problem);
    CHECK(names_of(task.problem, scope.j_rel) ==
          names_of(task2.problem, scope2.j_rel));
    std::set<std::string> retained1, retained2;
    for (ActionId a : scope.retained_actions)
        retained1.insert(task.problem.action_name(a));
    for (ActionId a : scope2.retained_actions)
        retained2.insert(task2.problem.action_name(a));
    CHECK(retained1 == retained2);

    // The emitted grounded problem is the retained slice of the original.
    PlanningProblem restricted =
        restrict_to_actions(task.problem, scope.retained_actions);
    CHECK(canonical_transitions(task2.problem) ==
          canonical_transitions(restricted));

    // A second emission pass deletes nothing.
    EmittedPddl emitted2 = emit_pddl(domain2, problem2, task2, scope2);
    CHECK(emitted2.removed_objects.empty());
    CHECK(emitted2.removed_schemas.empty());
}

TEST_CASE("gripper PDDL scopes to itself and round-trips through emission") {
    Domain domain = parse_domain(fixture("gripper-domain.pddl"));
    Problem problem = parse_problem(fixture("gripper-4.pddl"));
    GroundedTask task = ground(domain, problem);
    CHECK(task.problem.num_actions() == 4 + 16 + 16);  // move, pick, drop

    ScopeResult scope = scope_task(task.problem);
    CHECK(scope.j_irrel.empty());
    CHECK(scope.retained_actions.size() ==
          static_cast<std::size_t>(task.problem.num_actions()));

    EmittedPddl emitted = emit_pddl(domain, problem, task, scope);
    CHECK(emitted.removed_objects.empty());
    CHECK(emitted.removed_schemas.empty());

    auto [domain2, problem2] =
        parse_pddl(emitted.domain_text, emitted.problem_text);
    GroundedTask task2 = ground(domain2, problem2);
    CHECK(isomorphic(task.problem, task2.problem));
}
