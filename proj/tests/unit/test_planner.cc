#include "doctest.h"

#include "scoper/search/planner.h"

using namespace scoper;
using namespace scoper::search;

namespace {

PlanningProblem counter_problem(long long target) {
    ProblemBuilder b;
    FluentId x = b.add_fluent("x", FluentKind::Numeric);
    ActionId inc = b.add_action("inc");
    b.add_transition(Formula::truth(), inc,
                     {{x, EffectFn::increase(LinearExpr(Rational(1)))}});
    b.set_initial(x, Value::numeric(0));
    b.set_goal(Formula::literal(Literal::compare(
        LinearExpr::variable(x), CmpOp::Eq, LinearExpr(Rational(target)))));
    return b.build();
}

// Depth-bounded exhaustive path enumeration: the independent optimality
// oracle for uniform-cost search on tiny instances.
std::optional<Rational> brute_force_cost(const PlanningProblem& pp, int max_depth) {
    std::optional<Rational> best;
    struct Item {
        State state;
        Rational cost;
        int depth;
    };
    std::vector<Item> stack{{pp.initial_state(), Rational(0), 0}};
    while (!stack.empty()) {
        Item item = std::move(stack.back());
        stack.pop_back();
        if (pp.goal().eval(item.state) && (!best || item.cost < *best))
            best = item.cost;
        if (item.depth >= max_depth)
            continue;
        for (const CaeTriple& t : pp.transitions()) {
            if (!t.precondition.eval(item.state))
                continue;
            stack.push_back(
                {apply(t, item.state), item.cost + t.cost, item.depth + 1});
        }
    }
    return best;
}

}  // namespace

TEST_CASE("goal true in the initial state gives the empty plan") {
    ProblemBuilder b;
    FluentId p = b.add_fluent("p", FluentKind::Propositional);
    b.add_transition(Formula::truth(), b.add_action("noop"), {});
    b.set_initial(p, Value::boolean(true));
    b.set_goal(Formula::literal(Literal::prop(p)));
    SolveResult r = solve(b.build());
    REQUIRE(r.solved());
    CHECK(r.plan->actions.empty());
    CHECK(r.plan->cost == Rational(0));
    CHECK(r.plan->trace.size() == 1);
}

TEST_CASE("counter to three takes three unit-cost steps") {
    SolveResult r = solve(counter_problem(3));
    REQUIRE(r.solved());
    CHECK(r.plan->actions.size() == 3);
    CHECK(r.plan->cost == Rational(3));
    CHECK(r.plan->trace.size() == 4);
}

TEST_CASE("unreachable goal in a bounded space is Unsolvable") {
    ProblemBuilder b;
    FluentId p = b.add_fluent("p", FluentKind::Propositional);
    FluentId q = b.add_fluent("q", FluentKind::Propositional);
    b.add_transition(Formula::literal(Literal::prop(q)), b.add_action("a"),
                     {{p, EffectFn::set_true()}});
    b.set_initial(p, Value::boolean(false));
    b.set_initial(q, Value::boolean(false));
    b.set_goal(Formula::literal(Literal::prop(p)));
    SolveResult r = solve(b.build());
    CHECK(r.status == SolveStatus::Unsolvable);
    CHECK_FALSE(r.truncated);
}

TEST_CASE("running off the numeric magnitude limit is Inconclusive") {
    PlanningProblem pp = counter_problem(-1);  // never reachable by increments
    SearchLimits limits;
    limits.max_numeric_magnitude = Rational(50);
    SolveResult r = solve(pp, limits);
    CHECK(r.status == SolveStatus::Inconclusive);
    CHECK(r.truncated);
}

TEST_CASE("expansion limit reports Inconclusive rather than Unsolvable") {
    SearchLimits limits;
    limits.max_expanded_states = 2;
    SolveResult r = solve(counter_problem(10), limits);
    CHECK(r.status == SolveStatus::Inconclusive);
}

TEST_CASE("optimal cost matches exhaustive path enumeration") {
    // Two routes to the goal: an expensive direct action and a cheap two-step
    // route; uniform-cost search must find the cheap one.
    ProblemBuilder b;
    FluentId p = b.add_fluent("p", FluentKind::Propositional);
    FluentId q = b.add_fluent("q", FluentKind::Propositional);
    b.add_transition(Formula::truth(), b.add_action("direct"),
                     {{p, EffectFn::set_true()}}, Rational(5));
    b.add_transition(Formula::truth(), b.add_action("prepare"),
                     {{q, EffectFn::set_true()}}, Rational(1));
    b.add_transition(Formula::literal(Literal::prop(q)), b.add_action("finish"),
                     {{p, EffectFn::set_true()}}, Rational(1));
    b.set_initial(p, Value::boolean(false));
    b.set_initial(q, Value::boolean(false));
    b.set_goal(Formula::literal(Literal::prop(p)));
    PlanningProblem pp = b.build();

    SolveResult r = solve(pp);
    REQUIRE(r.solved());
    std::optional<Rational> oracle = brute_force_cost(pp, 5);
    REQUIRE(oracle.has_value());
    CHECK(r.plan->cost == *oracle);
    CHECK(r.plan->cost == Rational(2));
}

TEST_CASE("zero-cost actions do not break optimality") {
    ProblemBuilder b;
    FluentId p = b.add_fluent("p", FluentKind::Propositional);
    FluentId q = b.add_fluent("q", FluentKind::Propositional);
    b.add_transition(Formula::truth(), b.add_action("free"),
                     {{q, EffectFn::set_true()}}, Rational(0));
    b.add_transition(Formula::literal(Literal::prop(q)), b.add_action("pay"),
                     {{p, EffectFn::set_true()}}, Rational(1));
    b.set_initial(p, Value::boolean(false));
    b.set_initial(q, Value::boolean(false));
    b.set_goal(Formula::literal(Literal::prop(p)));
    PlanningProblem pp = b.build();
    SolveResult r = solve(pp);
    REQUIRE(r.solved());
    CHECK(r.plan->cost == *brute_force_cost(pp, 4));
}

TEST_CASE("replay projects traces and fires the unique applicable triple") {
    ProblemBuilder b;
    FluentId x = b.add_fluent("x", FluentKind::Numeric);
    FluentId y = b.add_fluent("y", FluentKind::Numeric);
    ActionId toggle = b.add_action("toggle");
    // One action symbol, two mutually exclusive triples.
    Formula zero = Formula::literal(
        Literal::compare(LinearExpr::variable(x), CmpOp::Eq, LinearExpr(Rational(0))));
    b.add_transition(zero, toggle, {{x, EffectFn::assign(Value::numeric(1))},
                                    {y, EffectFn::increase(LinearExpr(Rational(1)))}});
    b.add_transition(Formula::negation(zero), toggle,
                     {{x, EffectFn::assign(Value::numeric(0))}});
    b.set_initial(x, Value::numeric(0));
    b.set_initial(y, Value::numeric(0));
    b.set_goal(Formula::truth());
    PlanningProblem pp = b.build();

    auto trace = replay(pp, {toggle, toggle, toggle}, {x, y});
    REQUIRE(trace.size() == 4);
    CHECK(trace[0] == std::vector<Value>{Value::numeric(0), Value::numeric(0)});
    CHECK(trace[1] == std::vector<Value>{Value::numeric(1), Value::numeric(1)});
    CHECK(trace[2] == std::vector<Value>{Value::numeric(0), Value::numeric(1)});
    CHECK(trace[3] == std::vector<Value>{Value::numeric(1), Value::numeric(2)});

    auto only_y = replay(pp, {toggle}, {y});
    CHECK(only_y[1] == std::vector<Value>{Value::numeric(1)});
}

TEST_CASE("replay reports the failing step") {
    ProblemBuilder b;
    FluentId p = b.add_fluent("p", FluentKind::Propositional);
    ActionId a = b.add_action("a");
    b.add_transition(Formula::literal(Literal::prop(p)), a,
                     {{p, EffectFn::set_false()}});
    b.set_initial(p, Value::boolean(true));
    b.set_goal(Formula::truth());
    PlanningProblem pp = b.build();

    CHECK_NOTHROW(replay(pp, {a}, {p}));
    try {
        replay(pp, {a, a}, {p});
        FAIL("expected ReplayException");
    } catch (const ReplayException& e) {
        CHECK(e.step == 1);
    }
}
