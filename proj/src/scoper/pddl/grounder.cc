#include "scoper/pddl/grounder.h"

#include "scoper/log.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace scoper::pddl {

namespace {

using Binding = std::map<std::string, std::string>;

bool looks_like_number(const std::string& token) {
    if (token.empty())
        return false;
    std::size_t i = (token[0] == '-' || token[0] == '+') ? 1 : 0;
    if (i >= token.size())
        return false;
    for (; i < token.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(token[i])) && token[i] != '.' &&
            token[i] != '/')
            return false;
    return true;
}

std::string grounded_name(const std::string& symbol,
                          const std::vector<std::string>& args) {
    std::string out = "(" + symbol;
    for (const std::string& a : args)
        out += " " + a;
    return out + ")";
}

// Typed variable list of a quantifier or forall-effect: (?x ?y - t ?z - u).
std::vector<TypedName> parse_typed_vars(const Sexpr& list) {
    std::vector<TypedName> vars;
    std::size_t pending_start = 0;
    for (std::size_t i = 0; i < list.items.size(); ++i) {
        const Sexpr& item = list.items[i];
        if (item.is_list())
            throw ParseError("<pddl>", item.line, "malformed typed variable list");
        if (item.atom == "-") {
            if (i + 1 >= list.items.size())
                throw ParseError("<pddl>", item.line, "dangling '-' in variable list");
            const std::string& type = list.items[++i].atom;
            for (std::size_t j = pending_start; j < vars.size(); ++j)
                vars[j].type = type;
            pending_start = vars.size();
        } else {
            vars.push_back(TypedName{item.atom, "object"});
        }
    }
    return vars;
}

class Grounder {
public:
    Grounder(const Domain& domain, const Problem& problem, const GroundOptions& options)
        : domain_(domain), problem_(problem), options_(options) {}

    GroundedTask run();

private:
    // ---- setup ----------------------------------------------------------
    void build_type_tables();
    void collect_affected_predicates();
    void index_init();
    void decide_cost_tracking();
    void enumerate_actions();
    void build_fluent_universe();
    void build_transitions();

    // ---- grounding helpers ----------------------------------------------
    std::string resolve_term(const Sexpr& term, const Binding& env) const;
    std::vector<std::string> resolve_args(const Sexpr& list, const Binding& env,
                                          std::size_t first) const;
    const std::vector<std::string>& objects_of_type(const std::string& type) const;

    void for_each_binding(const std::vector<TypedName>& params, Binding& env,
                          std::size_t index, const std::function<void()>& body) const;

    // Walks one effect tree, reporting grounded primitive effects.
    void walk_effect(const Sexpr& effect, Binding& env,
                     const std::function<void(const std::string&)>& on_add,
                     const std::function<void(const std::string&)>& on_delete,
                     const std::function<void(const std::string& op,
                                              const std::string& target,
                                              const Sexpr& amount, Binding& env)>&
                         on_numeric) const;

    Formula ground_condition(const Sexpr& condition, Binding& env) const;
    LinearExpr ground_fexp(const Sexpr& fexp, Binding& env) const;

    [[noreturn]] void fail(const Sexpr& at, const std::string& message) const {
        throw ParseError("<pddl>", at.line, message);
    }

    void check_predicate(const Sexpr& atom) const {
        auto it = predicate_arity_.find(atom.head());
        if (it == predicate_arity_.end())
            fail(atom, "undeclared predicate " + atom.head());
        if (atom.items.size() - 1 != it->second)
            fail(atom, "arity mismatch for predicate " + atom.head());
    }

    void check_function(const Sexpr& atom) const {
        auto it = function_arity_.find(atom.head());
        if (it == function_arity_.end())
            fail(atom, "undeclared function " + atom.head());
        if (atom.items.size() - 1 != it->second)
            fail(atom, "arity mismatch for function " + atom.head());
    }

    const Domain& domain_;
    const Problem& problem_;
    GroundOptions options_;

    std::set<std::string> declared_types_;
    std::map<std::string, std::string> type_parent_;
    std::map<std::string, std::vector<std::string>> objects_by_type_;
    std::map<std::string, std::string> object_type_;
    std::vector<std::string> no_objects_;

    std::map<std::string, std::size_t> predicate_arity_;
    std::map<std::string, std::size_t> function_arity_;
    std::set<std::string> affected_predicates_;

    std::set<std::string> init_true_atoms_;
    std::map<std::string, Rational> init_numeric_;

    bool cost_tracking_ = false;
    bool unit_costs_ = true;

    struct PendingAction {
        int schema_index;
        std::vector<std::string> args;
    };
    std::vector<PendingAction> pending_;

    ProblemBuilder builder_;
    std::map<std::string, FluentId> fluent_ids_;
    GroundingMap map_;
};

void Grounder::build_type_tables() {
    declared_types_.insert("object");
    for (const auto& [type, parent] : domain_.types) {
        declared_types_.insert(type);
        declared_types_.insert(parent);
        type_parent_[type] = parent;
    }

    auto add_object = [&](const TypedName& obj) {
        if (object_type_.count(obj.name))
            throw InvalidProblemError("duplicate object name: " + obj.name);
        if (!declared_types_.count(obj.type))
            throw InvalidProblemError("object " + obj.name + " has undeclared type " +
                                      obj.type);
        object_type_[obj.name] = obj.type;
        std::string type = obj.type;
        std::set<std::string> visited;
        while (true) {
            objects_by_type_[type].push_back(obj.name);
            if (type == "object" || visited.count(type))
                break;
            visited.insert(type);
            auto it = type_parent_.find(type);
            type = it == type_parent_.end() ? "object" : it->second;
        }
    };
    for (const TypedName& c : domain_.constants)
        add_object(c);
    for (const TypedName& o : problem_.objects)
        add_object(o);
}

void Grounder::collect_affected_predicates() {
    for (const PredicateDecl& p : domain_.predicates)
        predicate_arity_[p.name] = p.params.size();
    for (const FunctionDecl& f : domain_.functions)
        function_arity_[f.name] = f.params.size();

    std::function<void(const Sexpr&)> scan = [&](const Sexpr& effect) {
        if (!effect.is_list() || effect.items.empty())
            return;
        const std::string& head = effect.head();
        if (head == "and" || head == "forall") {
            for (std::size_t i = 1; i < effect.items.size(); ++i)
                scan(effect.items[i]);
        } else if (head == "not") {
            if (effect.items.size() == 2)
                scan(effect.items[1]);
        } else if (head == "assign" || head == "increase" || head == "decrease") {
            // numeric; no predicate affected
        } else if (predicate_arity_.count(head)) {
            affected_predicates_.insert(head);
        }
    };
    for (const ActionSchema& schema : domain_.actions)
        scan(schema.effect);
}

void Grounder::index_init() {
    for (const auto& atom : problem_.init_atoms) {
        const std::string& pred = atom[0];
        auto arity = predicate_arity_.find(pred);
        if (arity == predicate_arity_.end())
            throw InvalidProblemError("init uses undeclared predicate " + pred);
        if (atom.size() - 1 != arity->second)
            throw InvalidProblemError("init atom arity mismatch for " + pred);
        std::vector<std::string> args(atom.begin() + 1, atom.end());
        for (const std::string& a : args)
            if (!object_type_.count(a))
                throw InvalidProblemError("init atom mentions unknown object " + a);
        init_true_atoms_.insert(grounded_name(pred, args));
    }
    for (const InitAssignment& assignment : problem_.init_assignments) {
        auto arity = function_arity_.find(assignment.function);
        if (arity == function_arity_.end())
            throw InvalidProblemError("init assigns undeclared function " +
                                      assignment.function);
        if (assignment.args.size() != arity->second)
            throw InvalidProblemError("init assignment arity mismatch for " +
                                      assignment.function);
        std::string name = grounded_name(assignment.function, assignment.args);
        if (!init_numeric_.emplace(name, assignment.value).second)
            throw InvalidProblemError("duplicate init assignment for " + name);
    }
}

void Grounder::decide_cost_tracking() {
    bool declared = false;
    for (const FunctionDecl& f : domain_.functions)
        if (f.name == "total-cost" && f.params.empty())
            declared = true;
    if (!declared) {
        if (problem_.metric_raw)
            throw InvalidProblemError(
                "problem declares a total-cost metric but the domain declares no "
                "(total-cost) function");
        cost_tracking_ = false;
        unit_costs_ = true;
        return;
    }

    // total-cost is treated as cost bookkeeping only if nothing ever reads it.
    std::function<bool(const Sexpr&, bool)> reads = [&](const Sexpr& s,
                                                        bool in_effect) -> bool {
        if (!s.is_list())
            return false;
        if (in_effect && s.head() == "increase" && s.items.size() == 3 &&
            s.items[1].head() == "total-cost")
            return reads(s.items[2], false);  // amount may not read it either
        if (s.head() == "total-cost")
            return true;
        for (std::size_t i = 1; i < s.items.size(); ++i)
            if (reads(s.items[i], in_effect && (s.head() == "and" ||
                                                s.head() == "forall")))
                return true;
        return false;
    };

    cost_tracking_ = true;
    for (const ActionSchema& schema : domain_.actions) {
        if (schema.precondition && reads(*schema.precondition, false))
            cost_tracking_ = false;
        if (reads(schema.effect, true))
            cost_tracking_ = false;
    }
    if (reads(problem_.goal, false))
        cost_tracking_ = false;
    if (!cost_tracking_)
        throw UnsupportedFeatureError(
            "total-cost", "total-cost may only appear as (increase (total-cost) ...)");
    unit_costs_ = !problem_.metric_raw.has_value();
}

const std::vector<std::string>& Grounder::objects_of_type(
    const std::string& type) const {
    auto it = objects_by_type_.find(type);
    return it == objects_by_type_.end() ? no_objects_ : it->second;
}

void Grounder::for_each_binding(const std::vector<TypedName>& params, Binding& env,
                                std::size_t index,
                                const std::function<void()>& body) const {
    if (index == params.size()) {
        body();
        return;
    }
    const TypedName& param = params[index];
    if (!declared_types_.count(param.type))
        throw InvalidProblemError("parameter " + param.name + " has undeclared type " +
                                  param.type);
    for (const std::string& obj : objects_of_type(param.type)) {
        env[param.name] = obj;
        for_each_binding(params, env, index + 1, body);
    }
    env.erase(param.name);
}

void Grounder::enumerate_actions() {
    long long total = 0;
    for (const ActionSchema& schema : domain_.actions) {
        long long count = 1;
        for (const TypedName& param : schema.params) {
            count *= static_cast<long long>(objects_of_type(param.type).size());
            if (count == 0)
                break;
            if (count > options_.max_grounded_actions)
                throw GroundingExplosionError(count, options_.max_grounded_actions);
        }
        total += count;
        if (total > options_.max_grounded_actions)
            throw GroundingExplosionError(total, options_.max_grounded_actions);
    }

    for (std::size_t s = 0; s < domain_.actions.size(); ++s) {
        const ActionSchema& schema = domain_.actions[s];
        Binding env;
        for_each_binding(schema.params, env, 0, [&] {
            PendingAction pending;
            pending.schema_index = static_cast<int>(s);
            for (const TypedName& param : schema.params)
                pending.args.push_back(env.at(param.name));
            pending_.push_back(std::move(pending));
        });
    }
}

std::string Grounder::resolve_term(const Sexpr& term, const Binding& env) const {
    if (!term.is_atom())
        fail(term, "expected an object term");
    if (!term.atom.empty() && term.atom[0] == '?') {
        auto it = env.find(term.atom);
        if (it == env.end())
            fail(term, "unbound variable " + term.atom);
        return it->second;
    }
    if (!object_type_.count(term.atom))
        fail(term, "unknown object " + term.atom);
    return term.atom;
}

std::vector<std::string> Grounder::resolve_args(const Sexpr& list, const Binding& env,
                                                std::size_t first) const {
    std::vector<std::string> args;
    for (std::size_t i = first; i < list.items.size(); ++i)
        args.push_back(resolve_term(list.items[i], env));
    return args;
}

void Grounder::walk_effect(
    const Sexpr& effect, Binding& env,
    const std::function<void(const std::string&)>& on_add,
    const std::function<void(const std::string&)>& on_delete,
    const std::function<void(const std::string& op, const std::string& target,
                             const Sexpr& amount, Binding& env)>& on_numeric) const {
    if (!effect.is_list())
        fail(effect, "malformed effect");
    if (effect.items.empty())
        return;  // () is an empty effect
    const std::string& head = effect.head();
    if (head == "and") {
        for (std::size_t i = 1; i < effect.items.size(); ++i)
            walk_effect(effect.items[i], env, on_add, on_delete, on_numeric);
    } else if (head == "forall") {
        if (effect.items.size() != 3 || !effect.items[1].is_list())
            fail(effect, "malformed (forall ...) effect");
        std::vector<TypedName> vars = parse_typed_vars(effect.items[1]);
        for_each_binding(vars, env, 0, [&] {
            walk_effect(effect.items[2], env, on_add, on_delete, on_numeric);
        });
    } else if (head == "when") {
        throw UnsupportedFeatureError(":conditional-effects");
    } else if (head == "not") {
        if (effect.items.size() != 2 || !effect.items[1].is_list())
            fail(effect, "malformed (not ...) effect");
        const Sexpr& atom = effect.items[1];
        check_predicate(atom);
        on_delete(grounded_name(atom.head(), resolve_args(atom, env, 1)));
    } else if (head == "assign" || head == "increase" || head == "decrease") {
        if (effect.items.size() != 3 || !effect.items[1].is_list())
            fail(effect, "malformed numeric effect");
        const Sexpr& target = effect.items[1];
        check_function(target);
        on_numeric(head, grounded_name(target.head(), resolve_args(target, env, 1)),
                   effect.items[2], env);
    } else if (predicate_arity_.count(head)) {
        check_predicate(effect);
        on_add(grounded_name(head, resolve_args(effect, env, 1)));
    } else if (head == "scale-up" || head == "scale-down") {
        throw UnsupportedFeatureError(head);
    } else {
        fail(effect, "effect on undeclared predicate " + head);
    }
}

void Grounder::build_fluent_universe() {
    auto declare_prop = [&](const std::string& name) {
        if (fluent_ids_.count(name))
            return;
        FluentId id = builder_.add_fluent(name, FluentKind::Propositional);
        fluent_ids_[name] = id;
    };
    auto declare_numeric = [&](const std::string& name) {
        if (fluent_ids_.count(name))
            return;
        FluentId id = builder_.add_fluent(name, FluentKind::Numeric);
        fluent_ids_[name] = id;
    };

    // Initial facts first (declaration order), then effect targets.
    for (const auto& atom : problem_.init_atoms) {
        if (!affected_predicates_.count(atom[0]))
            continue;  // static predicate: folded, never a fluent
        std::vector<std::string> args(atom.begin() + 1, atom.end());
        declare_prop(grounded_name(atom[0], args));
    }
    for (const InitAssignment& assignment : problem_.init_assignments) {
        std::string name = grounded_name(assignment.function, assignment.args);
        if (cost_tracking_ && assignment.function == "total-cost")
            continue;
        declare_numeric(name);
    }

    for (const PendingAction& pending : pending_) {
        const ActionSchema& schema = domain_.actions[pending.schema_index];
        Binding env;
        for (std::size_t i = 0; i < schema.params.size(); ++i)
            env[schema.params[i].name] = pending.args[i];
        walk_effect(
            schema.effect, env, declare_prop, declare_prop,
            [&](const std::string& op, const std::string& target, const Sexpr&,
                Binding&) {
                if (cost_tracking_ && target == "(total-cost)") {
                    if (op != "increase")
                        throw UnsupportedFeatureError(
                            "total-cost", "only (increase (total-cost) ...) is "
                                          "supported");
                    return;
                }
                declare_numeric(target);
            });
    }

    // Record object mentions per fluent for the emitter.
    map_.fluent_objects.resize(fluent_ids_.size());
    for (const auto& [name, id] : fluent_ids_) {
        // name is "(symbol arg1 arg2)"; split on spaces, drop the symbol.
        std::vector<std::string> parts;
        std::string token;
        for (char c : name.substr(1, name.size() - 2)) {
            if (c == ' ') {
                parts.push_back(token);
                token.clear();
            } else {
                token += c;
            }
        }
        parts.push_back(token);
        for (std::size_t i = 1; i < parts.size(); ++i)
            map_.fluent_objects[id].push_back(parts[i]);
    }
}

Formula Grounder::ground_condition(const Sexpr& condition, Binding& env) const {
    if (!condition.is_list())
        fail(condition, "malformed condition");
    if (condition.items.empty())
        return Formula::truth();
    const std::string& head = condition.head();

    if (head == "and" || head == "or") {
        std::vector<Formula> parts;
        for (std::size_t i = 1; i < condition.items.size(); ++i)
            parts.push_back(ground_condition(condition.items[i], env));
        return head == "and" ? Formula::conjunction(std::move(parts))
                             : Formula::disjunction(std::move(parts));
    }
    if (head == "not") {
        if (condition.items.size() != 2)
            fail(condition, "malformed (not ...)");
        return Formula::negation(ground_condition(condition.items[1], env));
    }
    if (head == "forall" || head == "exists") {
        if (condition.items.size() != 3 || !condition.items[1].is_list())
            fail(condition, "malformed quantifier");
        std::vector<TypedName> vars = parse_typed_vars(condition.items[1]);
        std::vector<Formula> parts;
        for_each_binding(vars, env, 0, [&] {
            parts.push_back(ground_condition(condition.items[2], env));
        });
        return head == "forall" ? Formula::conjunction(std::move(parts))
                                : Formula::disjunction(std::move(parts));
    }
    if (head == "=" && condition.items.size() == 3 && condition.items[1].is_atom() &&
        condition.items[2].is_atom() && !looks_like_number(condition.items[1].atom) &&
        !looks_like_number(condition.items[2].atom)) {
        // Object equality resolves at grounding time.
        std::string lhs = resolve_term(condition.items[1], env);
        std::string rhs = resolve_term(condition.items[2], env);
        return lhs == rhs ? Formula::truth() : Formula::falsity();
    }
    if (head == "<" || head == "<=" || head == "=" || head == ">=" || head == ">") {
        if (condition.items.size() != 3)
            fail(condition, "malformed comparison");
        CmpOp op = head == "<"    ? CmpOp::Lt
                   : head == "<=" ? CmpOp::Le
                   : head == "="  ? CmpOp::Eq
                   : head == ">=" ? CmpOp::Ge
                                  : CmpOp::Gt;
        LinearExpr lhs = ground_fexp(condition.items[1], env);
        LinearExpr rhs = ground_fexp(condition.items[2], env);
        return Formula::literal(Literal::compare(lhs, op, rhs));
    }
    if (head == "imply")
        throw UnsupportedFeatureError("imply");

    if (!predicate_arity_.count(head))
        fail(condition, "condition on undeclared predicate " + head);
    check_predicate(condition);
    std::string name = grounded_name(head, resolve_args(condition, env, 1));
    if (!affected_predicates_.count(head)) {
        // Static predicate: evaluate against init and fold.
        return init_true_atoms_.count(name) ? Formula::truth() : Formula::falsity();
    }
    auto it = fluent_ids_.find(name);
    if (it == fluent_ids_.end()) {
        // Never in init, never affected: constant false by closed world.
        log::debug("folding " + name + " to false (no initial value, no effect)");
        return Formula::falsity();
    }
    return Formula::literal(Literal::prop(it->second));
}

LinearExpr Grounder::ground_fexp(const Sexpr& fexp, Binding& env) const {
    if (fexp.is_atom()) {
        if (!looks_like_number(fexp.atom))
            fail(fexp, "expected a number or (function ...), got " + fexp.atom);
        return LinearExpr(parse_rational(fexp.atom));
    }
    if (fexp.items.empty())
        fail(fexp, "empty numeric expression");
    const std::string& head = fexp.head();

    if (head == "+") {
        LinearExpr sum;
        for (std::size_t i = 1; i < fexp.items.size(); ++i)
            sum += ground_fexp(fexp.items[i], env);
        return sum;
    }
    if (head == "-") {
        if (fexp.items.size() == 2)
            return ground_fexp(fexp.items[1], env).negated();
        LinearExpr result = ground_fexp(fexp.items[1], env);
        for (std::size_t i = 2; i < fexp.items.size(); ++i)
            result -= ground_fexp(fexp.items[i], env);
        return result;
    }
    if (head == "*") {
        LinearExpr result(Rational(1));
        bool have_variable = false;
        Rational scale(1);
        LinearExpr variable_part;
        for (std::size_t i = 1; i < fexp.items.size(); ++i) {
            LinearExpr operand = ground_fexp(fexp.items[i], env);
            if (operand.is_constant()) {
                scale *= operand.constant();
            } else if (have_variable) {
                throw UnsupportedFeatureError("nonlinear-arithmetic",
                                              "product of two fluent expressions");
            } else {
                have_variable = true;
                variable_part = operand;
            }
        }
        if (!have_variable)
            return LinearExpr(scale);
        variable_part *= scale;
        return variable_part;
    }
    if (head == "/") {
        if (fexp.items.size() != 3)
            fail(fexp, "malformed (/ ...)");
        LinearExpr lhs = ground_fexp(fexp.items[1], env);
        LinearExpr rhs = ground_fexp(fexp.items[2], env);
        if (!rhs.is_constant())
            throw UnsupportedFeatureError("nonlinear-arithmetic",
                                          "division by a fluent expression");
        if (rhs.constant() == Rational(0))
            throw InvalidProblemError("division by zero in a numeric expression");
        lhs *= Rational(rhs.constant().denominator(), rhs.constant().numerator());
        return lhs;
    }

    if (!function_arity_.count(head))
        fail(fexp, "expression uses undeclared function " + head);
    check_function(fexp);
    std::string name = grounded_name(head, resolve_args(fexp, env, 1));
    auto it = fluent_ids_.find(name);
    if (it == fluent_ids_.end())
        throw InvalidProblemError("numeric fluent " + name +
                                  " has no initial value and no effect");
    return LinearExpr::variable(it->second);
}

void Grounder::build_transitions() {
    for (const PendingAction& pending : pending_) {
        const ActionSchema& schema = domain_.actions[pending.schema_index];
        Binding env;
        for (std::size_t i = 0; i < schema.params.size(); ++i)
            env[schema.params[i].name] = pending.args[i];

        Formula precondition = schema.precondition
                                   ? ground_condition(*schema.precondition, env)
                                   : Formula::truth();
        if (precondition.is_false()) {
            log::debug("dropping statically impossible grounding " +
                       grounded_name(schema.name, pending.args));
            continue;
        }

        std::set<std::string> adds;
        std::set<std::string> deletes;
        std::map<FluentId, EffectFn> numeric_effects;
        Rational cost(unit_costs_ ? 1 : 0);
        walk_effect(
            schema.effect, env,
            [&](const std::string& name) { adds.insert(name); },
            [&](const std::string& name) { deletes.insert(name); },
            [&](const std::string& op, const std::string& target, const Sexpr& amount,
                Binding& inner_env) {
                if (cost_tracking_ && target == "(total-cost)") {
                    LinearExpr value = ground_fexp(amount, inner_env);
                    if (!value.is_constant())
                        throw UnsupportedFeatureError(
                            "total-cost", "action costs must be constant");
                    if (!unit_costs_)
                        cost += value.constant();
                    return;
                }
                FluentId f = fluent_ids_.at(target);
                LinearExpr value = ground_fexp(amount, inner_env);
                EffectFn effect = op == "assign"     ? EffectFn::assign_expr(value)
                                  : op == "increase" ? EffectFn::increase(value)
                                                     : EffectFn::decrease(value);
                if (!numeric_effects.emplace(f, std::move(effect)).second)
                    throw InvalidProblemError("conflicting numeric effects on " +
                                              target + " in one action");
            });

        std::map<FluentId, EffectFn> effects = std::move(numeric_effects);
        for (const std::string& name : adds)
            effects.insert_or_assign(fluent_ids_.at(name), EffectFn::set_true());
        for (const std::string& name : deletes)
            if (!adds.count(name))  // add wins over delete of the same literal
                effects.insert_or_assign(fluent_ids_.at(name), EffectFn::set_false());

        if (cost < Rational(0))
            throw InvalidProblemError("negative action cost on " +
                                      grounded_name(schema.name, pending.args));

        ActionId action = builder_.add_action(grounded_name(schema.name, pending.args));
        map_.action_origins.push_back(
            GroundingMap::ActionOrigin{schema.name, pending.args});
        builder_.add_transition(std::move(precondition), action, std::move(effects),
                                std::move(cost));
    }
}

GroundedTask Grounder::run() {
    build_type_tables();
    collect_affected_predicates();
    index_init();
    decide_cost_tracking();
    enumerate_actions();
    build_fluent_universe();
    build_transitions();

    // Initial state: closed world for propositions, declared values for
    // numeric fluents.
    for (const auto& [name, id] : fluent_ids_) {
        if (builder_.fluent(id).kind == FluentKind::Propositional) {
            builder_.set_initial(id, Value::boolean(init_true_atoms_.count(name) > 0));
        } else {
            auto it = init_numeric_.find(name);
            if (it == init_numeric_.end())
                throw InvalidProblemError("numeric fluent " + name +
                                          " has no initial value");
            builder_.set_initial(id, Value::numeric(it->second));
        }
    }

    Binding env;
    builder_.set_goal(ground_condition(problem_.goal, env));

    GroundedTask task;
    task.problem = builder_.build();
    task.map = std::move(map_);
    return task;
}

}  // namespace

GroundedTask ground(const Domain& domain, const Problem& problem,
                    const GroundOptions& options) {
    return Grounder(domain, problem, options).run();
}

}  // namespace scoper::pddl
