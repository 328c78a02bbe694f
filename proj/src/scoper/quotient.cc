#include "scoper/quotient.h"

#include <algorithm>
#include <map>

namespace scoper {

namespace {

using EffectSignature = std::vector<std::pair<FluentId, EffectFn>>;

struct SignatureLess {
    bool operator()(const EffectSignature& a, const EffectSignature& b) const {
        if (a.size() != b.size())
            return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].first != b[i].first)
                return a[i].first < b[i].first;
            int c = a[i].second.compare(b[i].second);
            if (c != 0)
                return c < 0;
        }
        return false;
    }
};

}  // namespace

std::vector<QuotientCae> reduce_transitions(const std::vector<CaeTriple>& transitions,
                                            const std::set<FluentId>& j) {
    std::map<EffectSignature, std::vector<int>, SignatureLess> parts;
    for (int i = 0; i < static_cast<int>(transitions.size()); ++i) {
        EffectSignature signature;
        for (const auto& [f, e] : transitions[i].effects)
            if (j.count(f))
                signature.emplace_back(f, e);
        if (signature.empty())
            continue;  // no effect on S[J]: part is discarded
        parts[std::move(signature)].push_back(i);
    }

    std::vector<QuotientCae> result;
    result.reserve(parts.size());
    for (const auto& [signature, members] : parts) {
        QuotientCae q;
        q.members = members;
        q.effects = std::map<FluentId, EffectFn>(signature.begin(), signature.end());

        std::vector<Formula> preconditions;
        std::set<ActionId> actions;
        std::set<FluentId> side;
        preconditions.reserve(members.size());
        for (int idx : members) {
            const CaeTriple& t = transitions[idx];
            preconditions.push_back(t.precondition);
            actions.insert(t.action);
            for (const auto& [f, e] : t.effects)
                if (!j.count(f))
                    side.insert(f);
        }
        q.precondition = Formula::disjunction(std::move(preconditions));
        q.actions.assign(actions.begin(), actions.end());
        q.side_effects.assign(side.begin(), side.end());
        result.push_back(std::move(q));
    }
    return result;
}

}  // namespace scoper
