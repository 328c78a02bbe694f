#include "scoper/pddl/writer.h"

#include <algorithm>
#include <set>

namespace scoper::pddl {

namespace {

void collect_atoms(const Sexpr& s, std::set<std::string>& out) {
    if (s.is_atom()) {
        out.insert(s.atom);
        return;
    }
    for (const Sexpr& item : s.items)
        collect_atoms(item, out);
}

bool mentions_any(const Sexpr& s, const std::set<std::string>& names) {
    if (s.is_atom())
        return names.count(s.atom) > 0;
    for (const Sexpr& item : s.items)
        if (mentions_any(item, names))
            return true;
    return false;
}

std::string print_typed_names(const std::vector<TypedName>& names,
                              const std::set<std::string>& skip) {
    std::string out;
    std::string open_type;
    for (const TypedName& n : names) {
        if (skip.count(n.name))
            continue;
        if (!out.empty() && n.type != open_type) {
            out += " - " + open_type;
        }
        if (!out.empty())
            out += " ";
        out += n.name;
        open_type = n.type;
    }
    if (!out.empty())
        out += " - " + open_type;
    return out;
}

std::string print_action(const Sexpr& raw) {
    std::string out = "  (:action " + raw.items[1].atom;
    for (std::size_t i = 2; i + 1 < raw.items.size(); i += 2)
        out += "\n    " + raw.items[i].atom + " " + raw.items[i + 1].to_string();
    return out + ")";
}

}  // namespace

EmittedPddl emit_pddl(const Domain& domain, const Problem& problem,
                      const GroundedTask& grounded, const ScopeResult& scope) {
    EmittedPddl out;

    // Objects that occur in some relevant or causally linked fluent stay, as
    // does anything the goal or an init assignment of a kept fluent mentions.
    std::set<std::string> kept_objects;
    auto keep_fluent_objects = [&](const std::vector<FluentId>& fluents) {
        for (FluentId f : fluents)
            for (const std::string& obj : grounded.map.fluent_objects[f])
                kept_objects.insert(obj);
    };
    keep_fluent_objects(scope.j_rel);
    keep_fluent_objects(scope.j_cl);
    collect_atoms(problem.goal, kept_objects);

    std::set<std::string> removed;
    for (const TypedName& obj : problem.objects)
        if (!kept_objects.count(obj.name))
            removed.insert(obj.name);

    // A retained grounding must never mention a removed object.
    for (ActionId a : scope.retained_actions) {
        const GroundingMap::ActionOrigin& origin = grounded.map.action_origins[a];
        for (const std::string& arg : origin.args)
            if (removed.count(arg))
                throw EmitInconsistencyError(
                    "retained action (" + origin.schema +
                    " ...) references the deleted object " + arg);
    }

    std::set<std::string> retained_schemas;
    for (ActionId a : scope.retained_actions)
        retained_schemas.insert(grounded.map.action_origins[a].schema);

    out.removed_objects.assign(removed.begin(), removed.end());
    for (const ActionSchema& schema : domain.actions)
        if (!retained_schemas.count(schema.name))
            out.removed_schemas.push_back(schema.name);

    // ---- domain ----------------------------------------------------------
    std::string d = "(define (domain " + domain.name + ")\n";
    if (domain.raw_requirements)
        d += "  " + domain.raw_requirements->to_string() + "\n";
    if (domain.raw_types)
        d += "  " + domain.raw_types->to_string() + "\n";
    if (domain.raw_constants)
        d += "  " + domain.raw_constants->to_string() + "\n";
    if (domain.raw_predicates)
        d += "  " + domain.raw_predicates->to_string() + "\n";
    if (domain.raw_functions)
        d += "  " + domain.raw_functions->to_string() + "\n";
    for (const ActionSchema& schema : domain.actions)
        if (retained_schemas.count(schema.name))
            d += print_action(schema.raw) + "\n";
    d += ")\n";
    out.domain_text = std::move(d);

    // ---- problem ---------------------------------------------------------
    std::string p = "(define (problem " + problem.name + ")\n";
    p += "  (:domain " + domain.name + ")\n";
    std::string objects = print_typed_names(problem.objects, removed);
    if (!objects.empty())
        p += "  (:objects " + objects + ")\n";
    p += "  (:init";
    for (const Sexpr& entry : problem.init_raw) {
        if (mentions_any(entry, removed))
            continue;
        p += "\n    " + entry.to_string();
    }
    p += ")\n";
    p += "  (:goal " + problem.goal.to_string() + ")\n";
    if (problem.metric_raw)
        p += "  " + problem.metric_raw->to_string() + "\n";
    p += ")\n";
    out.problem_text = std::move(p);

    return out;
}

}  // namespace scoper::pddl
