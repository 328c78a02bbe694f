#include "doctest.h"

#include "scoper/scoping.h"

#include <map>

using namespace scoper;

namespace {

Formula num_eq(FluentId a, FluentId b) {
    return Formula::literal(Literal::compare(LinearExpr::variable(a), CmpOp::Eq,
                                             LinearExpr::variable(b)));
}

Formula num_eq_const(FluentId a, long long c) {
    return Formula::literal(
        Literal::compare(LinearExpr::variable(a), CmpOp::Eq, LinearExpr(Rational(c))));
}

EffectFn plus_one() { return EffectFn::increase(LinearExpr(Rational(1))); }

// Hand-coded playroom: a hand effector moving on a grid with a thermostat in
// the way, a light switch, music buttons and a monkey to frighten by bringing
// the hand to the ball while the music plays.
struct Playroom {
    FluentId hand_x, hand_y, thermo_y, temperature;
    FluentId ball_x, ball_y, switch_x, switch_y, green_x, green_y, red_x, red_y;
    FluentId lights, music, monkey;
    std::map<std::string, ActionId> actions;
    PlanningProblem problem;

    explicit Playroom(bool music_on_initially = true) {
        ProblemBuilder b;
        hand_x = b.add_fluent("(hand-x agent1)", FluentKind::Numeric);
        hand_y = b.add_fluent("(hand-y agent1)", FluentKind::Numeric);
        thermo_y = b.add_fluent("(thermostat-y thermo1)", FluentKind::Numeric);
        temperature = b.add_fluent("(temperature)", FluentKind::Numeric);
        ball_x = b.add_fluent("(ball-x ball1)", FluentKind::Numeric);
        ball_y = b.add_fluent("(ball-y ball1)", FluentKind::Numeric);
        switch_x = b.add_fluent("(switch-x switch1)", FluentKind::Numeric);
        switch_y = b.add_fluent("(switch-y switch1)", FluentKind::Numeric);
        green_x = b.add_fluent("(green-x green1)", FluentKind::Numeric);
        green_y = b.add_fluent("(green-y green1)", FluentKind::Numeric);
        red_x = b.add_fluent("(red-x red1)", FluentKind::Numeric);
        red_y = b.add_fluent("(red-y red1)", FluentKind::Numeric);
        lights = b.add_fluent("(lights)", FluentKind::Propositional);
        music = b.add_fluent("(music)", FluentKind::Propositional);
        monkey = b.add_fluent("(monkey-frightened)", FluentKind::Propositional);

        auto act = [&](const std::string& name) {
            ActionId a = b.add_action(name);
            actions[name] = a;
            return a;
        };

        Formula at_thermo = num_eq(hand_y, thermo_y);
        b.add_transition(Formula::negation(at_thermo), act("move_north_hand"),
                         {{hand_y, plus_one()}});
        b.add_transition(at_thermo, act("move_and_flick"),
                         {{hand_y, plus_one()}, {temperature, plus_one()}});
        b.add_transition(Formula::truth(), act("move_south_hand"),
                         {{hand_y, EffectFn::decrease(LinearExpr(Rational(1)))}});
        b.add_transition(Formula::truth(), act("move_east_hand"),
                         {{hand_x, plus_one()}});
        b.add_transition(Formula::truth(), act("move_west_hand"),
                         {{hand_x, EffectFn::decrease(LinearExpr(Rational(1)))}});

        Formula at_switch = Formula::conjunction(
            {num_eq(hand_x, switch_x), num_eq(hand_y, switch_y)});
        b.add_transition(Formula::conjunction(
                             {at_switch, Formula::literal(Literal::prop(lights, false))}),
                         act("turn_on_lights"), {{lights, EffectFn::set_true()}});
        b.add_transition(Formula::conjunction(
                             {at_switch, Formula::literal(Literal::prop(lights))}),
                         act("turn_off_lights"), {{lights, EffectFn::set_false()}});

        Formula at_green = Formula::conjunction(
            {num_eq(hand_x, green_x), num_eq(hand_y, green_y)});
        b.add_transition(
            Formula::conjunction({at_green, Formula::literal(Literal::prop(lights))}),
            act("push_green"), {{music, EffectFn::set_true()}});
        Formula at_red = Formula::conjunction(
            {num_eq(hand_x, red_x), num_eq(hand_y, red_y)});
        b.add_transition(
            Formula::conjunction({at_red, Formula::literal(Literal::prop(lights))}),
            act("push_red"), {{music, EffectFn::set_false()}});

        Formula at_ball = Formula::conjunction(
            {num_eq(hand_x, ball_x), num_eq(hand_y, ball_y)});
        b.add_transition(
            Formula::conjunction({at_ball, Formula::literal(Literal::prop(music))}),
            act("throw_ball"), {{monkey, EffectFn::set_true()}});

        b.set_initial(hand_x, Value::numeric(0));
        b.set_initial(hand_y, Value::numeric(0));
        b.set_initial(thermo_y, Value::numeric(5));
        b.set_initial(temperature, Value::numeric(0));
        b.set_initial(ball_x, Value::numeric(2));
        b.set_initial(ball_y, Value::numeric(3));
        b.set_initial(switch_x, Value::numeric(1));
        b.set_initial(switch_y, Value::numeric(1));
        b.set_initial(green_x, Value::numeric(4));
        b.set_initial(green_y, Value::numeric(4));
        b.set_initial(red_x, Value::numeric(4));
        b.set_initial(red_y, Value::numeric(5));
        b.set_initial(lights, Value::boolean(false));
        b.set_initial(music, Value::boolean(music_on_initially));
        b.set_initial(monkey, Value::boolean(false));
        b.set_goal(Formula::literal(Literal::prop(monkey)));
        problem = b.build();
    }
};

}  // namespace

TEST_CASE("quotient merge of the thermostat flick pair") {
    Playroom room;
    // Restrict to the two movement triples from the running example.
    std::vector<CaeTriple> pair{room.problem.transitions()[0],
                                room.problem.transitions()[1]};

    std::vector<QuotientCae> reduced = reduce_transitions(pair, {room.hand_y});
    REQUIRE(reduced.size() == 1);
    const QuotientCae& q = reduced[0];
    CHECK(to_cnf(q.precondition).clauses.empty());  // precondition is True
    CHECK(q.effects == std::map<FluentId, EffectFn>{{room.hand_y, plus_one()}});
    CHECK(q.side_effects == std::vector<FluentId>{room.temperature});
    CHECK(q.actions == std::vector<ActionId>{room.actions["move_north_hand"],
                                             room.actions["move_and_flick"]});
    CHECK(q.members == std::vector<int>{0, 1});
}

TEST_CASE("reduce over the full fluent set merges only identical effects") {
    Playroom room;
    std::set<FluentId> all;
    for (FluentId f = 0; f < room.problem.num_fluents(); ++f)
        all.insert(f);
    std::vector<QuotientCae> reduced =
        reduce_transitions(room.problem.transitions(), all);
    // All effects differ pairwise, so nothing merges and nothing is discarded.
    CHECK(reduced.size() == room.problem.transitions().size());
    for (const QuotientCae& q : reduced) {
        CHECK(q.side_effects.empty());
        CHECK(q.members.size() == 1);
    }
}

TEST_CASE("reduce over the empty set discards everything") {
    Playroom room;
    CHECK(reduce_transitions(room.problem.transitions(), {}).empty());
}

TEST_CASE("is_scoped distinguishes initially-true from initially-false clauses") {
    Playroom on(true);
    std::set<FluentId> j{on.hand_x, on.hand_y, on.ball_x, on.ball_y, on.monkey};
    std::vector<QuotientCae> reduced =
        reduce_transitions(on.problem.transitions(), j);
    CHECK(is_scoped(reduced, on.problem.initial_state(), j).ok());

    Playroom off(false);
    std::vector<QuotientCae> reduced_off =
        reduce_transitions(off.problem.transitions(), j);
    ScopedCheck check = is_scoped(reduced_off, off.problem.initial_state(), j);
    REQUIRE_FALSE(check.ok());
    CHECK(check.witness->vars() == std::set<FluentId>{off.music});
}

TEST_CASE("playroom classification: relevant, causally linked, irrelevant") {
    Playroom room;
    ScopeResult scope = scope_task(room.problem);

    CHECK(scope.j_rel == std::vector<FluentId>{room.hand_x, room.hand_y, room.ball_x,
                                               room.ball_y, room.monkey});
    CHECK(scope.j_cl == std::vector<FluentId>{room.music});
    CHECK(scope.j_irrel ==
          std::vector<FluentId>{room.thermo_y, room.temperature, room.switch_x,
                                room.switch_y, room.green_x, room.green_y, room.red_x,
                                room.red_y, room.lights});

    std::set<std::string> retained;
    for (ActionId a : scope.retained_actions)
        retained.insert(room.problem.action_name(a));
    CHECK(retained == std::set<std::string>{"move_north_hand", "move_and_flick",
                                            "move_south_hand", "move_east_hand",
                                            "move_west_hand", "throw_ball"});

    CHECK(causal_link_separation_holds(scope));
    CHECK(scope.iterations <= room.problem.num_fluents() + 2);

    // The terminal reduced system passes is_scoped when rebuilt explicitly.
    GoalAugmented aug = augment_with_goal(room.problem);
    std::set<FluentId> j = scope.j_rel_set();
    j.insert(aug.goal_fluent);
    std::vector<QuotientCae> reduced =
        reduce_transitions(aug.problem.transitions(), j);
    CHECK(is_scoped(reduced, aug.problem.initial_state(), j).ok());
}

TEST_CASE("music off makes lights and buttons relevant") {
    Playroom room(false);
    ScopeResult scope = scope_task(room.problem);
    std::set<FluentId> rel = scope.j_rel_set();
    CHECK(rel.count(room.music));
    CHECK(rel.count(room.lights));
    CHECK(rel.count(room.green_x));
    // Temperature stays irrelevant for any initial state.
    std::set<FluentId> irrel(scope.j_irrel.begin(), scope.j_irrel.end());
    CHECK(irrel.count(room.temperature));
    CHECK(irrel.count(room.thermo_y));
}

TEST_CASE("goal over every affected fluent saturates to the full fluent set") {
    ProblemBuilder b;
    FluentId x = b.add_fluent("x", FluentKind::Numeric);
    FluentId y = b.add_fluent("y", FluentKind::Numeric);
    ActionId ax = b.add_action("bump-x");
    ActionId ay = b.add_action("bump-y");
    b.add_transition(Formula::truth(), ax, {{x, plus_one()}});
    b.add_transition(Formula::truth(), ay, {{y, plus_one()}});
    b.set_initial(x, Value::numeric(0));
    b.set_initial(y, Value::numeric(0));
    b.set_goal(Formula::conjunction({num_eq_const(x, 2), num_eq_const(y, 1)}));
    PlanningProblem pp = b.build();

    ScopeResult scope = scope_task(pp);
    CHECK(scope.j_rel == std::vector<FluentId>{x, y});
    CHECK(scope.j_cl.empty());
    CHECK(scope.j_irrel.empty());
    CHECK(scope.retained_actions == std::vector<ActionId>{ax, ay});
}

TEST_CASE("goal already true in the initial state scopes to nothing") {
    ProblemBuilder b;
    FluentId p = b.add_fluent("p", FluentKind::Propositional);
    ActionId flip = b.add_action("flip");
    b.add_transition(Formula::truth(), flip, {{p, EffectFn::set_false()}});
    b.set_initial(p, Value::boolean(true));
    b.set_goal(Formula::literal(Literal::prop(p)));
    PlanningProblem pp = b.build();

    ScopeResult scope = scope_task(pp);
    CHECK(scope.j_rel.empty());
    CHECK(scope.j_cl == std::vector<FluentId>{p});
    CHECK(scope.j_irrel.empty());
    CHECK(scope.retained_actions.empty());
}

TEST_CASE("empty goal yields an empty relevant set") {
    ProblemBuilder b;
    FluentId p = b.add_fluent("p", FluentKind::Propositional);
    ActionId flip = b.add_action("flip");
    b.add_transition(Formula::truth(), flip, {{p, EffectFn::set_false()}});
    b.set_initial(p, Value::boolean(false));
    b.set_goal(Formula::truth());
    ScopeResult scope = scope_task(b.build());
    CHECK(scope.j_rel.empty());
    CHECK(scope.j_cl.empty());
    CHECK(scope.j_irrel == std::vector<FluentId>{p});
}

TEST_CASE("iterations grow the relevant set monotonically on a chain") {
    // x0 -> x1 -> ... -> x4: each action sets the next bit if the previous
    // one is set; goal is the last bit.
    ProblemBuilder b;
    std::vector<FluentId> bits;
    for (int i = 0; i < 5; ++i)
        bits.push_back(b.add_fluent("x" + std::to_string(i),
                                    FluentKind::Propositional));
    for (int i = 1; i < 5; ++i)
        b.add_transition(Formula::literal(Literal::prop(bits[i - 1])),
                         b.add_action("step" + std::to_string(i)),
                         {{bits[i], EffectFn::set_true()}});
    for (FluentId f : bits)
        b.set_initial(f, Value::boolean(false));
    b.set_initial(bits[0], Value::boolean(true));
    b.set_goal(Formula::literal(Literal::prop(bits[4])));
    PlanningProblem pp = b.build();

    ScopeResult scope = scope_task(pp);
    // x1..x4 become relevant link by link; x0 is true initially and never
    // affected, so it stays causally linked rather than relevant.
    CHECK(scope.j_rel == std::vector<FluentId>{bits[1], bits[2], bits[3], bits[4]});
    CHECK(scope.j_cl == std::vector<FluentId>{bits[0]});
    CHECK(scope.iterations <= pp.num_fluents() + 2);
    CHECK(scope.retained_actions.size() == 4);
}

TEST_CASE("restrict_to_actions keeps tables and drops transitions") {
    Playroom room;
    ScopeResult scope = scope_task(room.problem);
    PlanningProblem scoped = restrict_to_actions(room.problem, scope.retained_actions);
    CHECK(scoped.num_fluents() == room.problem.num_fluents());
    CHECK(scoped.num_actions() == room.problem.num_actions());
    CHECK(scoped.transitions().size() == 6);
    CHECK(scoped.initial_state() == room.problem.initial_state());
}
