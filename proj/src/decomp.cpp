#include "alldiff/decomp.hpp"

#include <deque>

namespace alldiff::decomp {

Disequality::Disequality(VariableId x, VariableId y) : a(std::min(x, y)), b(std::max(x, y)) {
    if (x == y) throw UsageError("disequality between a variable and itself");
}

std::vector<Disequality> decompose(const AllDifferentConstraint& c) {
    std::vector<Disequality> out;
    const auto n = c.vars.size();
    out.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(c.vars[i], c.vars[j]);
    }
    return out;
}

FilterOutcome ac_filter(const std::vector<Disequality>& diseqs, const DomainStore& s) {
    DomainStore store = s;
    std::vector<std::vector<std::size_t>> neighbours(store.size());
    for (const auto& d : diseqs) {
        if (d.b.index >= store.size()) throw UsageError("disequality references a dangling variable");
        neighbours[d.a.index].push_back(d.b.index);
        neighbours[d.b.index].push_back(d.a.index);
    }

    std::deque<std::size_t> singletons;
    std::vector<bool> queued(store.size(), false);
    for (std::size_t i = 0; i < store.size(); ++i) {
        const Domain& dom = store[VariableId{i}];
        if (neighbours[i].empty()) continue;
        if (dom.empty()) {
            return FilterOutcome::infeasible(to_string(VariableId{i}) + " has an empty domain");
        }
        if (dom.fixed()) {
            singletons.push_back(i);
            queued[i] = true;
        }
    }

    // A fixed variable stays fixed, so each one is processed once.
    while (!singletons.empty()) {
        std::size_t i = singletons.front();
        singletons.pop_front();
        Value v = store[VariableId{i}].min();
        for (std::size_t j : neighbours[i]) {
            Domain& dj = store[VariableId{j}];
            if (!dj.erase(v)) continue;
            if (dj.empty()) {
                return FilterOutcome::infeasible(to_string(VariableId{j}) + " emptied by " +
                                                 to_string(VariableId{i}) + " = " +
                                                 std::to_string(v));
            }
            if (dj.fixed() && !queued[j]) {
                queued[j] = true;
                singletons.push_back(j);
            }
        }
    }
    return FilterOutcome::fixpoint(std::move(store));
}

}  // namespace alldiff::decomp
