#include "scoper/search/planner.h"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace scoper::search {

namespace {

struct Node {
    Rational g;
    long long order;  // insertion counter, breaks cost ties FIFO
    int record;       // index into the trace records
};

struct NodeWorse {
    bool operator()(const Node& a, const Node& b) const {
        if (a.g != b.g)
            return a.g > b.g;
        return a.order > b.order;
    }
};

struct Record {
    State state;
    int parent = -1;
    ActionId action = -1;
    int transition = -1;
};

bool within_magnitude(const State& s, const Rational& bound) {
    for (const Value& v : s.values()) {
        if (v.is_boolean())
            continue;
        const Rational& r = v.as_numeric();
        if (r > bound || r < -bound)
            return false;
    }
    return true;
}

Plan extract_plan(const std::vector<Record>& records, int goal_record,
                  const Rational& cost) {
    Plan plan;
    plan.cost = cost;
    for (int r = goal_record; r != -1; r = records[r].parent) {
        plan.trace.push_back(records[r].state);
        if (records[r].action != -1)
            plan.actions.push_back(records[r].action);
    }
    std::reverse(plan.actions.begin(), plan.actions.end());
    std::reverse(plan.trace.begin(), plan.trace.end());
    return plan;
}

}  // namespace

SolveResult solve(const PlanningProblem& pp, const SearchLimits& limits) {
    SolveResult result;

    std::vector<Record> records;
    records.push_back(Record{pp.initial_state(), -1, -1, -1});

    std::unordered_map<State, Rational> best_g;
    best_g.emplace(pp.initial_state(), Rational(0));

    std::priority_queue<Node, std::vector<Node>, NodeWorse> open;
    long long counter = 0;
    open.push(Node{Rational(0), counter++, 0});

    while (!open.empty()) {
        Node node = open.top();
        open.pop();
        // Copy: pushes below may reallocate the record vector.
        State state = records[node.record].state;
        auto best = best_g.find(state);
        if (best != best_g.end() && best->second < node.g)
            continue;  // stale entry

        if (pp.goal().eval(state)) {
            result.status = SolveStatus::Solved;
            result.plan = extract_plan(records, node.record, node.g);
            return result;
        }

        if (result.expanded >= limits.max_expanded_states) {
            result.truncated = true;
            result.status = SolveStatus::Inconclusive;
            return result;
        }
        ++result.expanded;

        for (int t = 0; t < static_cast<int>(pp.transitions().size()); ++t) {
            const CaeTriple& triple = pp.transitions()[t];
            if (!triple.precondition.eval(state))
                continue;
            State next = apply(triple, state);
            if (!within_magnitude(next, limits.max_numeric_magnitude)) {
                result.truncated = true;
                continue;
            }
            Rational g = node.g + triple.cost;
            auto it = best_g.find(next);
            if (it != best_g.end() && it->second <= g)
                continue;
            records.push_back(Record{next, node.record, triple.action, t});
            best_g.insert_or_assign(std::move(next), g);
            open.push(Node{std::move(g), counter++, static_cast<int>(records.size()) - 1});
        }
    }

    result.status = result.truncated ? SolveStatus::Inconclusive : SolveStatus::Unsolvable;
    return result;
}

std::vector<Value> project(const State& s, const std::set<FluentId>& fluents) {
    std::vector<Value> out;
    out.reserve(fluents.size());
    for (FluentId f : fluents)
        out.push_back(s.at(f));
    return out;
}

std::vector<std::vector<Value>> replay(const PlanningProblem& pp,
                                       const std::vector<ActionId>& actions,
                                       const std::set<FluentId>& project_to) {
    std::vector<std::vector<Value>> trace;
    State state = pp.initial_state();
    trace.push_back(project(state, project_to));
    for (std::size_t step = 0; step < actions.size(); ++step) {
        ActionId a = actions[step];
        const CaeTriple* fired = nullptr;
        for (const CaeTriple& t : pp.transitions()) {
            if (t.action != a || !t.precondition.eval(state))
                continue;
            // Mutual exclusivity of same-action preconditions guarantees at
            // most one applicable triple.
            fired = &t;
            break;
        }
        if (!fired)
            throw ReplayException(static_cast<int>(step),
                                  "no applicable transition for action " +
                                      pp.action_name(a));
        state = apply(*fired, state);
        trace.push_back(project(state, project_to));
    }
    return trace;
}

}  // namespace scoper::search
