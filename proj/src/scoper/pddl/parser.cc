#include "scoper/pddl/parser.h"

#include "scoper/log.h"

#include <set>

namespace scoper::pddl {

namespace {

const std::set<std::string> kAcceptedRequirements = {
    ":strips",
    ":typing",
    ":fluents",
    ":numeric-fluents",
    ":negative-preconditions",
    ":equality",
    ":action-costs",
    ":universal-preconditions",
    ":existential-preconditions",
    ":quantified-preconditions",
    ":disjunctive-preconditions",
};

struct Context {
    std::string filename;

    [[noreturn]] void fail(const Sexpr& at, const std::string& message) const {
        throw ParseError(filename, at.line, message);
    }
};

std::vector<TypedName> parse_typed_list(const Context& ctx, const Sexpr& list,
                                        std::size_t first) {
    std::vector<TypedName> out;
    std::size_t pending_start = out.size();
    for (std::size_t i = first; i < list.items.size(); ++i) {
        const Sexpr& item = list.items[i];
        if (item.is_list()) {
            if (item.head() == "either")
                throw UnsupportedFeatureError("either-types");
            ctx.fail(item, "expected a name in a typed list");
        }
        if (item.atom == "-") {
            if (i + 1 >= list.items.size())
                ctx.fail(item, "dangling '-' in typed list");
            const Sexpr& type = list.items[++i];
            if (type.is_list())
                throw UnsupportedFeatureError("either-types");
            for (std::size_t j = pending_start; j < out.size(); ++j)
                out[j].type = type.atom;
            pending_start = out.size();
        } else {
            out.push_back(TypedName{item.atom, "object"});
        }
    }
    return out;
}

void reject_conditional_effects(const Context& ctx, const Sexpr& effect) {
    if (!effect.is_list())
        return;
    if (effect.head() == "when")
        throw UnsupportedFeatureError(":conditional-effects",
                                      ctx.filename + ":" +
                                          std::to_string(effect.line));
    for (const Sexpr& item : effect.items)
        reject_conditional_effects(ctx, item);
}

ActionSchema parse_action(const Context& ctx, const Sexpr& form) {
    ActionSchema schema;
    schema.raw = form;
    if (form.items.size() < 2 || !form.items[1].is_atom())
        ctx.fail(form, "action without a name");
    schema.name = form.items[1].atom;

    bool have_effect = false;
    for (std::size_t i = 2; i < form.items.size(); ++i) {
        const Sexpr& key = form.items[i];
        if (!key.is_atom())
            ctx.fail(key, "expected a keyword in action " + schema.name);
        if (i + 1 >= form.items.size())
            ctx.fail(key, "missing value after " + key.atom);
        const Sexpr& value = form.items[++i];
        if (key.atom == ":parameters") {
            if (!value.is_list())
                ctx.fail(value, ":parameters expects a list");
            schema.params = parse_typed_list(ctx, value, 0);
        } else if (key.atom == ":precondition") {
            if (!value.is_list() || !value.items.empty())
                schema.precondition = value;
        } else if (key.atom == ":effect") {
            reject_conditional_effects(ctx, value);
            schema.effect = value;
            have_effect = true;
        } else {
            ctx.fail(key, "unknown action keyword " + key.atom);
        }
    }
    if (!have_effect)
        ctx.fail(form, "action " + schema.name + " has no :effect");
    return schema;
}

const Sexpr& single_root(const Context& ctx, const std::vector<Sexpr>& roots) {
    if (roots.size() != 1 || !roots[0].is_list())
        throw ParseError(ctx.filename, roots.empty() ? 1 : roots.back().line,
                         "expected exactly one (define ...) form");
    return roots[0];
}

}  // namespace

Domain parse_domain(const std::string& text, const std::string& filename) {
    Context ctx{filename};
    std::vector<Sexpr> roots = parse_sexprs(text, filename);
    const Sexpr& define = single_root(ctx, roots);
    if (define.head() != "define" || define.items.size() < 2 ||
        define.items[1].head() != "domain" || define.items[1].items.size() != 2)
        ctx.fail(define, "expected (define (domain NAME) ...)");

    Domain domain;
    domain.name = define.items[1].items[1].atom;

    for (std::size_t i = 2; i < define.items.size(); ++i) {
        const Sexpr& section = define.items[i];
        const std::string& head = section.head();
        if (head == ":requirements") {
            domain.raw_requirements = section;
            for (std::size_t r = 1; r < section.items.size(); ++r) {
                const std::string& req = section.items[r].atom;
                if (!kAcceptedRequirements.count(req))
                    throw UnsupportedFeatureError(req);
                domain.requirements.push_back(req);
            }
        } else if (head == ":types") {
            domain.raw_types = section;
            for (const TypedName& t : parse_typed_list(ctx, section, 1))
                domain.types.emplace_back(t.name, t.type);
        } else if (head == ":constants") {
            domain.raw_constants = section;
            domain.constants = parse_typed_list(ctx, section, 1);
        } else if (head == ":predicates") {
            domain.raw_predicates = section;
            for (std::size_t p = 1; p < section.items.size(); ++p) {
                const Sexpr& decl = section.items[p];
                if (!decl.is_list() || decl.items.empty() || !decl.items[0].is_atom())
                    ctx.fail(decl, "malformed predicate declaration");
                domain.predicates.push_back(
                    PredicateDecl{decl.items[0].atom,
                                  parse_typed_list(ctx, decl, 1)});
            }
        } else if (head == ":functions") {
            domain.raw_functions = section;
            for (std::size_t p = 1; p < section.items.size(); ++p) {
                const Sexpr& decl = section.items[p];
                if (decl.is_atom() && decl.atom == "-") {
                    // "- number" annotations after a block of declarations
                    if (p + 1 >= section.items.size())
                        ctx.fail(decl, "dangling '-' in :functions");
                    const Sexpr& type = section.items[++p];
                    if (!type.is_atom() || type.atom != "number")
                        ctx.fail(type, "functions must map to number");
                    continue;
                }
                if (!decl.is_list() || decl.items.empty() || !decl.items[0].is_atom())
                    ctx.fail(decl, "malformed function declaration");
                domain.functions.push_back(
                    FunctionDecl{decl.items[0].atom, parse_typed_list(ctx, decl, 1)});
            }
        } else if (head == ":action") {
            domain.actions.push_back(parse_action(ctx, section));
        } else if (head == ":durative-action") {
            throw UnsupportedFeatureError(":durative-actions");
        } else if (head == ":derived") {
            throw UnsupportedFeatureError(":derived-predicates");
        } else {
            ctx.fail(section, "unknown domain section " + head);
        }
    }
    return domain;
}

Problem parse_problem(const std::string& text, const std::string& filename) {
    Context ctx{filename};
    std::vector<Sexpr> roots = parse_sexprs(text, filename);
    const Sexpr& define = single_root(ctx, roots);
    if (define.head() != "define" || define.items.size() < 2 ||
        define.items[1].head() != "problem" || define.items[1].items.size() != 2)
        ctx.fail(define, "expected (define (problem NAME) ...)");

    Problem problem;
    problem.name = define.items[1].items[1].atom;
    bool have_goal = false;

    for (std::size_t i = 2; i < define.items.size(); ++i) {
        const Sexpr& section = define.items[i];
        const std::string& head = section.head();
        if (head == ":domain") {
            if (section.items.size() != 2 || !section.items[1].is_atom())
                ctx.fail(section, "malformed (:domain ...)");
            problem.domain_name = section.items[1].atom;
        } else if (head == ":objects") {
            problem.objects = parse_typed_list(ctx, section, 1);
        } else if (head == ":init") {
            for (std::size_t e = 1; e < section.items.size(); ++e) {
                const Sexpr& entry = section.items[e];
                problem.init_raw.push_back(entry);
                if (!entry.is_list() || entry.items.empty())
                    ctx.fail(entry, "malformed init entry");
                if (entry.head() == "=") {
                    if (entry.items.size() != 3 || !entry.items[1].is_list() ||
                        entry.items[1].items.empty() || !entry.items[2].is_atom())
                        ctx.fail(entry, "expected (= (function args...) number)");
                    InitAssignment assignment;
                    assignment.function = entry.items[1].items[0].atom;
                    for (std::size_t a = 1; a < entry.items[1].items.size(); ++a)
                        assignment.args.push_back(entry.items[1].items[a].atom);
                    try {
                        assignment.value = parse_rational(entry.items[2].atom);
                    } catch (const std::invalid_argument&) {
                        ctx.fail(entry, "malformed numeric value in init");
                    }
                    problem.init_assignments.push_back(std::move(assignment));
                } else if (entry.head() == "not") {
                    // Closed world: negated init literals add nothing.
                    log::info(filename + ": ignoring negated init literal " +
                              entry.to_string());
                } else {
                    std::vector<std::string> atom;
                    for (const Sexpr& part : entry.items) {
                        if (!part.is_atom())
                            ctx.fail(entry, "malformed init atom");
                        atom.push_back(part.atom);
                    }
                    problem.init_atoms.push_back(std::move(atom));
                }
            }
        } else if (head == ":goal") {
            if (section.items.size() != 2)
                ctx.fail(section, "malformed (:goal ...)");
            problem.goal = section.items[1];
            have_goal = true;
        } else if (head == ":metric") {
            if (section.items.size() != 3 || section.items[1].atom != "minimize" ||
                !section.items[2].is_list() ||
                section.items[2].head() != "total-cost")
                throw UnsupportedFeatureError(
                    "metric", "only (:metric minimize (total-cost)) is supported");
            problem.metric_raw = section;
        } else {
            ctx.fail(section, "unknown problem section " + head);
        }
    }
    if (!have_goal)
        throw ParseError(filename, define.line, "problem has no :goal");
    return problem;
}

std::pair<Domain, Problem> parse_pddl(const std::string& domain_text,
                                      const std::string& problem_text,
                                      const std::string& domain_filename,
                                      const std::string& problem_filename) {
    Domain domain = parse_domain(domain_text, domain_filename);
    Problem problem = parse_problem(problem_text, problem_filename);
    if (!problem.domain_name.empty() && problem.domain_name != domain.name)
        throw ParseError(problem_filename, 1,
                         "problem is for domain '" + problem.domain_name +
                             "', not '" + domain.name + "'");
    return {std::move(domain), std::move(problem)};
}

}  // namespace scoper::pddl
