#include "scoper/random_problems.h"

#include <random>

namespace scoper {

namespace {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(int percent) { return range(1, 100) <= percent; }

private:
    std::mt19937_64 rng_;
};

struct Shape {
    std::vector<FluentId> fluents;
    std::vector<FluentKind> kinds;
};

Literal random_literal(Gen& gen, const Shape& shape) {
    FluentId f = shape.fluents[gen.range(0, static_cast<int>(shape.fluents.size()) - 1)];
    if (shape.kinds[f] == FluentKind::Propositional)
        return Literal::prop(f, gen.chance(50));
    static const CmpOp ops[] = {CmpOp::Lt, CmpOp::Le, CmpOp::Eq,
                                CmpOp::Ne, CmpOp::Ge, CmpOp::Gt};
    return Literal::compare(LinearExpr::variable(f), ops[gen.range(0, 5)],
                            LinearExpr(Rational(gen.range(0, 3))));
}

Formula random_precondition(Gen& gen, const Shape& shape) {
    if (gen.chance(30))
        return Formula::truth();
    std::vector<Formula> parts;
    int count = gen.range(1, 2);
    for (int i = 0; i < count; ++i) {
        Formula part = Formula::literal(random_literal(gen, shape));
        if (gen.chance(15))
            part = Formula::disjunction(
                {part, Formula::literal(random_literal(gen, shape))});
        parts.push_back(std::move(part));
    }
    return Formula::conjunction(std::move(parts));
}

}  // namespace

PlanningProblem random_micro_problem(std::uint64_t seed) {
    Gen gen(seed);
    ProblemBuilder builder;
    Shape shape;

    int num_fluents = gen.range(2, 6);
    for (int i = 0; i < num_fluents; ++i) {
        FluentKind kind =
            gen.chance(50) ? FluentKind::Propositional : FluentKind::Numeric;
        std::optional<DomainBound> bound;
        if (kind == FluentKind::Numeric)
            bound = DomainBound{0, 3};
        FluentId f = builder.add_fluent("f" + std::to_string(i), kind, bound);
        shape.fluents.push_back(f);
        shape.kinds.push_back(kind);
    }

    int num_actions = gen.range(3, 12);
    for (int i = 0; i < num_actions; ++i) {
        ActionId a = builder.add_action("act-" + std::to_string(i));
        std::vector<Formula> pre_parts{random_precondition(gen, shape)};

        std::map<FluentId, EffectFn> effects;
        int num_effects = gen.range(1, 2);
        for (int e = 0; e < num_effects; ++e) {
            FluentId f = shape.fluents[gen.range(0, num_fluents - 1)];
            if (shape.kinds[f] == FluentKind::Propositional) {
                effects.insert_or_assign(f, gen.chance(50) ? EffectFn::set_true()
                                                           : EffectFn::set_false());
            } else if (gen.chance(70)) {
                effects.insert_or_assign(
                    f, EffectFn::assign(Value::numeric(gen.range(0, 3))));
            } else if (gen.chance(50)) {
                // Increments are guarded by the domain bound so the reachable
                // space stays finite and exhaustively searchable.
                effects.insert_or_assign(f, EffectFn::increase(LinearExpr(Rational(1))));
                pre_parts.push_back(Formula::literal(Literal::compare(
                    LinearExpr::variable(f), CmpOp::Le, LinearExpr(Rational(2)))));
            } else {
                effects.insert_or_assign(f, EffectFn::decrease(LinearExpr(Rational(1))));
                pre_parts.push_back(Formula::literal(Literal::compare(
                    LinearExpr::variable(f), CmpOp::Ge, LinearExpr(Rational(1)))));
            }
        }

        Rational cost(1);
        if (gen.chance(10))
            cost = Rational(0);
        else if (gen.chance(20))
            cost = Rational(2);
        builder.add_transition(Formula::conjunction(std::move(pre_parts)), a,
                               std::move(effects), cost);
    }

    for (int i = 0; i < num_fluents; ++i) {
        if (shape.kinds[i] == FluentKind::Propositional)
            builder.set_initial(i, Value::boolean(gen.chance(50)));
        else
            builder.set_initial(i, Value::numeric(gen.range(0, 3)));
    }

    std::vector<Formula> goal_parts;
    int goal_size = gen.range(1, 2);
    for (int i = 0; i < goal_size; ++i) {
        FluentId f = shape.fluents[gen.range(0, num_fluents - 1)];
        if (shape.kinds[f] == FluentKind::Propositional) {
            goal_parts.push_back(Formula::literal(Literal::prop(f, gen.chance(70))));
        } else {
            static const CmpOp goal_ops[] = {CmpOp::Eq, CmpOp::Le, CmpOp::Ge};
            goal_parts.push_back(Formula::literal(
                Literal::compare(LinearExpr::variable(f), goal_ops[gen.range(0, 2)],
                                 LinearExpr(Rational(gen.range(0, 3))))));
        }
    }
    builder.set_goal(Formula::conjunction(std::move(goal_parts)));

    return builder.build();
}

}  // namespace scoper
