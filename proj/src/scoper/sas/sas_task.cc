#include "scoper/sas/sas_task.h"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace scoper::sas {

namespace {

class LineCursor {
public:
    LineCursor(const std::string& text, const std::string& filename)
        : text_(text), filename_(filename) {}

    bool at_end() const { return pos_ >= text_.size(); }
    std::size_t offset() const { return pos_; }
    int line_number() const { return line_; }

    std::string next() {
        if (at_end())
            fail("unexpected end of file");
        std::size_t eol = text_.find('\n', pos_);
        std::string line;
        if (eol == std::string::npos) {
            line = text_.substr(pos_);
            pos_ = text_.size();
        } else {
            line = text_.substr(pos_, eol - pos_);
            pos_ = eol + 1;
        }
        ++line_;
        return line;
    }

    void expect(const std::string& keyword) {
        std::string line = next();
        if (line != keyword)
            fail("expected '" + keyword + "', got '" + line + "'");
    }

    long long integer() {
        std::string line = next();
        return parse_int(line);
    }

    long long parse_int(const std::string& token) const {
        if (token.empty())
            fail("expected an integer, got an empty line");
        char* end = nullptr;
        long long v = std::strtoll(token.c_str(), &end, 10);
        if (end != token.c_str() + token.size())
            fail("expected an integer, got '" + token + "'");
        return v;
    }

    std::vector<long long> integers(int expected_count) {
        std::string line = next();
        std::istringstream in(line);
        std::vector<long long> out;
        std::string token;
        while (in >> token)
            out.push_back(parse_int(token));
        if (expected_count >= 0 && static_cast<int>(out.size()) != expected_count)
            fail("expected " + std::to_string(expected_count) + " integers, got '" +
                 line + "'");
        return out;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(filename_, line_, message);
    }

private:
    const std::string& text_;
    std::string filename_;
    std::size_t pos_ = 0;
    int line_ = 0;
};

}  // namespace

SasTask parse_sas(const std::string& text, const std::string& filename) {
    LineCursor cursor(text, filename);
    SasTask task;

    cursor.expect("begin_version");
    long long version = cursor.integer();
    if (version != 3)
        cursor.fail("unsupported SAS+ version " + std::to_string(version) +
                    "; only version 3 is handled");
    cursor.expect("end_version");

    cursor.expect("begin_metric");
    long long metric = cursor.integer();
    if (metric != 0 && metric != 1)
        cursor.fail("metric flag must be 0 or 1");
    task.metric = metric == 1;
    cursor.expect("end_metric");

    long long num_variables = cursor.integer();
    for (long long v = 0; v < num_variables; ++v) {
        cursor.expect("begin_variable");
        SasVariable var;
        var.name = cursor.next();
        var.axiom_layer = static_cast<int>(cursor.integer());
        if (var.axiom_layer != -1)
            throw AxiomsUnsupportedError();
        var.domain_size = static_cast<int>(cursor.integer());
        if (var.domain_size <= 0)
            cursor.fail("variable " + var.name + " has empty domain");
        for (int i = 0; i < var.domain_size; ++i)
            var.value_names.push_back(cursor.next());
        cursor.expect("end_variable");
        task.variables.push_back(std::move(var));
    }

    auto check_pair = [&](long long var, long long val, bool allow_none) {
        if (var < 0 || var >= num_variables)
            cursor.fail("variable index " + std::to_string(var) + " out of range");
        long long size = task.variables[static_cast<std::size_t>(var)].domain_size;
        long long lo = allow_none ? -1 : 0;
        if (val < lo || val >= size)
            cursor.fail("value " + std::to_string(val) + " out of range for variable " +
                        std::to_string(var));
    };

    long long num_mutexes = cursor.integer();
    for (long long m = 0; m < num_mutexes; ++m) {
        cursor.expect("begin_mutex_group");
        long long facts = cursor.integer();
        std::vector<std::pair<int, int>> group;
        for (long long i = 0; i < facts; ++i) {
            std::vector<long long> pair = cursor.integers(2);
            check_pair(pair[0], pair[1], false);
            group.emplace_back(static_cast<int>(pair[0]), static_cast<int>(pair[1]));
        }
        cursor.expect("end_mutex_group");
        task.mutex_groups.push_back(std::move(group));
    }

    cursor.expect("begin_state");
    for (long long v = 0; v < num_variables; ++v) {
        long long val = cursor.integer();
        check_pair(v, val, false);
        task.initial_values.push_back(static_cast<int>(val));
    }
    cursor.expect("end_state");

    cursor.expect("begin_goal");
    long long goal_size = cursor.integer();
    for (long long i = 0; i < goal_size; ++i) {
        std::vector<long long> pair = cursor.integers(2);
        check_pair(pair[0], pair[1], false);
        task.goal.emplace_back(static_cast<int>(pair[0]), static_cast<int>(pair[1]));
    }
    cursor.expect("end_goal");

    std::size_t count_line_start = cursor.offset();
    long long num_operators = cursor.integer();
    task.prefix_raw = text.substr(0, count_line_start);
    task.count_raw = text.substr(count_line_start, cursor.offset() - count_line_start);

    for (long long o = 0; o < num_operators; ++o) {
        std::size_t block_start = cursor.offset();
        cursor.expect("begin_operator");
        SasOperator op;
        op.name = cursor.next();
        long long num_prevail = cursor.integer();
        for (long long i = 0; i < num_prevail; ++i) {
            std::vector<long long> pair = cursor.integers(2);
            check_pair(pair[0], pair[1], false);
            op.prevail.emplace_back(static_cast<int>(pair[0]),
                                    static_cast<int>(pair[1]));
        }
        long long num_effects = cursor.integer();
        if (num_effects <= 0)
            cursor.fail("operator " + op.name + " declares no effects");
        for (long long i = 0; i < num_effects; ++i) {
            std::vector<long long> fields = cursor.integers(-1);
            if (fields.empty())
                cursor.fail("malformed effect line");
            if (fields[0] != 0)
                throw UnsupportedFeatureError(":conditional-effects",
                                              "operator " + op.name +
                                                  " has effect conditions");
            if (fields.size() != 4)
                cursor.fail("malformed effect line in operator " + op.name);
            check_pair(fields[1], fields[2], true);
            check_pair(fields[1], fields[3], false);
            op.pre_posts.push_back(SasOperator::PrePost{
                static_cast<int>(fields[1]), static_cast<int>(fields[2]),
                static_cast<int>(fields[3])});
        }
        op.cost = cursor.integer();
        if (op.cost < 0)
            cursor.fail("operator " + op.name + " has negative cost");
        cursor.expect("end_operator");
        op.raw = text.substr(block_start, cursor.offset() - block_start);
        task.operators.push_back(std::move(op));
    }

    std::size_t suffix_start = cursor.offset();
    long long num_axioms = cursor.integer();
    if (num_axioms > 0)
        throw AxiomsUnsupportedError();
    while (!cursor.at_end()) {
        std::string line = cursor.next();
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c)))
                cursor.fail("trailing content after axiom section: '" + line + "'");
    }
    task.suffix_raw = text.substr(suffix_start);

    return task;
}

std::string serialize_sas(const SasTask& task) {
    std::vector<bool> keep(task.operators.size(), true);
    return serialize_sas(task, keep);
}

std::string serialize_sas(const SasTask& task, const std::vector<bool>& keep_operator) {
    std::size_t kept = 0;
    for (bool k : keep_operator)
        kept += k ? 1 : 0;

    std::string out = task.prefix_raw;
    if (kept == task.operators.size())
        out += task.count_raw;
    else
        out += std::to_string(kept) + "\n";
    for (std::size_t i = 0; i < task.operators.size(); ++i)
        if (keep_operator[i])
            out += task.operators[i].raw;
    out += task.suffix_raw;
    return out;
}

PlanningProblem sas_to_problem(const SasTask& task) {
    ProblemBuilder builder;
    for (std::size_t v = 0; v < task.variables.size(); ++v) {
        const SasVariable& var = task.variables[v];
        try {
            builder.add_fluent(var.name, FluentKind::Numeric,
                               DomainBound{0, var.domain_size - 1});
        } catch (const InvalidProblemError&) {
            // Translator output has unique names; disambiguate just in case.
            builder.add_fluent(var.name + " #" + std::to_string(v),
                               FluentKind::Numeric, DomainBound{0, var.domain_size - 1});
        }
    }

    auto equality = [](int var, int val) {
        return Formula::literal(Literal::compare(LinearExpr::variable(var), CmpOp::Eq,
                                                 LinearExpr(Rational(val))));
    };

    for (std::size_t i = 0; i < task.operators.size(); ++i) {
        const SasOperator& op = task.operators[i];
        ActionId action;
        try {
            action = builder.add_action(op.name);
        } catch (const InvalidProblemError&) {
            action = builder.add_action(op.name + " #" + std::to_string(i));
        }

        std::vector<Formula> pre;
        for (const auto& [var, val] : op.prevail)
            pre.push_back(equality(var, val));
        std::map<FluentId, EffectFn> effects;
        for (const SasOperator::PrePost& pp : op.pre_posts) {
            if (pp.pre != -1)
                pre.push_back(equality(pp.var, pp.pre));
            effects.insert_or_assign(pp.var,
                                     EffectFn::assign(Value::numeric(pp.post)));
        }
        builder.add_transition(Formula::conjunction(std::move(pre)), action,
                               std::move(effects),
                               task.metric ? Rational(op.cost) : Rational(1));
    }

    for (std::size_t v = 0; v < task.initial_values.size(); ++v)
        builder.set_initial(static_cast<FluentId>(v),
                            Value::numeric(task.initial_values[v]));

    std::vector<Formula> goal;
    for (const auto& [var, val] : task.goal)
        goal.push_back(equality(var, val));
    builder.set_goal(Formula::conjunction(std::move(goal)));

    return builder.build();
}

std::string emit_sas(const SasTask& task, const std::vector<ActionId>& retained) {
    std::vector<bool> keep(task.operators.size(), false);
    for (ActionId a : retained)
        if (a >= 0 && static_cast<std::size_t>(a) < keep.size())
            keep[static_cast<std::size_t>(a)] = true;
    return serialize_sas(task, keep);
}

}  // namespace scoper::sas
