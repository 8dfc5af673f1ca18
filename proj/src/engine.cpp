#include "alldiff/engine.hpp"

#include <deque>

#include "alldiff/bounds.hpp"
#include "alldiff/decomp.hpp"
#include "alldiff/range.hpp"
#include "alldiff/regin.hpp"

namespace alldiff::engine {

FilterOutcome filter_constraint(ConsistencyLevel level, const AllDifferentConstraint& c,
                                const DomainStore& s) {
    switch (level) {
        case ConsistencyLevel::DecompAC: return decomp::ac_filter(decomp::decompose(c), s);
        case ConsistencyLevel::Bound: return bounds::bc_filter(c, s);
        case ConsistencyLevel::Range: return range::rc_filter(c, s);
        case ConsistencyLevel::HyperArc: return regin::gac_filter(c, s);
    }
    throw UsageError("unknown consistency level");
}

namespace {

class Propagator {
public:
    Propagator(const Problem& p, ConsistencyLevel level)
        : problem_(p), level_(level), watchers_(p.n), channels_of_(p.n) {
        if (auto errors = validate(p); !errors.empty()) {
            throw UsageError("invalid problem: " + to_string(errors.front()));
        }
        for (std::size_t ci = 0; ci < p.constraints.size(); ++ci) {
            for (VariableId v : p.constraints[ci].vars) watchers_[v.index].push_back(ci);
        }
        for (std::size_t k = 0; k < p.channels.size(); ++k) {
            channels_of_[p.channels[k].base.index].push_back(k);
            channels_of_[p.channels[k].derived.index].push_back(k);
        }
        if (level == ConsistencyLevel::DecompAC) {
            for (const auto& c : p.constraints) diseqs_.push_back(decomp::decompose(c));
        }
    }

    FilterOutcome run(DomainStore store) const {
        if (store.size() != problem_.n) throw UsageError("propagate: store shape differs from problem");
        for (std::size_t i = 0; i < store.size(); ++i) {
            if (store[VariableId{i}].empty()) {
                return FilterOutcome::infeasible(problem_.name_of(VariableId{i}) +
                                                 " has an empty domain");
            }
        }

        std::vector<std::size_t> synced;
        std::vector<VariableId> all(problem_.n);
        for (std::size_t i = 0; i < problem_.n; ++i) all[i] = VariableId{i};
        if (auto failed = sync_channels(store, all, synced)) return *failed;

        const std::size_t count = problem_.constraints.size();
        std::deque<std::size_t> queue;
        std::vector<bool> queued(count, true);
        for (std::size_t ci = 0; ci < count; ++ci) queue.push_back(ci);

        auto enqueue = [&](std::size_t cj) {
            if (!queued[cj]) {
                queued[cj] = true;
                queue.push_back(cj);
            }
        };

        std::vector<VariableId> changed;
        while (!queue.empty()) {
            const std::size_t ci = queue.front();
            queue.pop_front();
            queued[ci] = false;
            const auto& c = problem_.constraints[ci];

            auto out = apply(ci, store);
            if (!out) {
                out.reason().constraint = ci;
                return out;
            }
            changed.clear();
            for (VariableId v : c.vars) {
                if (out.store()[v] != store[v]) changed.push_back(v);
            }
            store = std::move(out.store());
            if (changed.empty()) continue;

            synced.clear();
            if (auto failed = sync_channels(store, changed, synced)) {
                failed->reason().constraint = ci;
                return *failed;
            }
            // The filters are idempotent, so ci only needs another pass when
            // a channel fed back into one of its own variables.
            for (VariableId v : changed) {
                for (std::size_t cj : watchers_[v.index]) {
                    if (cj != ci) enqueue(cj);
                }
            }
            for (std::size_t i : synced) {
                for (std::size_t cj : watchers_[i]) enqueue(cj);
            }
        }
        return FilterOutcome::fixpoint(std::move(store));
    }

private:
    FilterOutcome apply(std::size_t ci, const DomainStore& store) const {
        if (level_ == ConsistencyLevel::DecompAC) return decomp::ac_filter(diseqs_[ci], store);
        return filter_constraint(level_, problem_.constraints[ci], store);
    }

    /// Intersects channel endpoints until base + offset and derived agree for
    /// every channel reachable from `touched`. Indices of variables narrowed
    /// here are appended to `synced`.
    std::optional<FilterOutcome> sync_channels(DomainStore& store,
                                               const std::vector<VariableId>& touched,
                                               std::vector<std::size_t>& synced) const {
        if (problem_.channels.empty()) return std::nullopt;
        std::deque<std::size_t> work;
        for (VariableId v : touched) work.push_back(v.index);
        while (!work.empty()) {
            const std::size_t i = work.front();
            work.pop_front();
            for (std::size_t k : channels_of_[i]) {
                const auto& ch = problem_.channels[k];
                Domain& base = store[ch.base];
                Domain& derived = store[ch.derived];
                bool narrowed_derived = derived.intersect(base.shifted(ch.offset)) > 0;
                bool narrowed_base = base.intersect(derived.shifted(-ch.offset)) > 0;
                for (auto [narrowed, var] : {std::pair{narrowed_derived, ch.derived},
                                             std::pair{narrowed_base, ch.base}}) {
                    if (!narrowed) continue;
                    if (store[var].empty()) {
                        return FilterOutcome::infeasible(problem_.name_of(var) +
                                                         " emptied by offset channel");
                    }
                    synced.push_back(var.index);
                    work.push_back(var.index);
                }
            }
        }
        return std::nullopt;
    }

    const Problem& problem_;
    ConsistencyLevel level_;
    std::vector<std::vector<std::size_t>> watchers_;
    std::vector<std::vector<std::size_t>> channels_of_;
    std::vector<std::vector<decomp::Disequality>> diseqs_;
};

class Search {
public:
    Search(const Problem& p, ConsistencyLevel level, SearchMode mode)
        : propagator_(p, level), mode_(mode) {}

    /// Returns true when the search should stop.
    bool explore(const DomainStore& store) {
        ++result_.stats.nodes_explored;
        auto out = propagator_.run(store);
        if (!out) {
            ++result_.stats.failures;
            return false;
        }
        const DomainStore& fixed = out.store();
        result_.stats.prunings += store.total_size() - fixed.total_size();

        std::optional<std::size_t> branch;
        for (std::size_t i = 0; i < fixed.size(); ++i) {
            if (!fixed[VariableId{i}].fixed()) {
                branch = i;
                break;
            }
        }
        if (!branch) {
            ++result_.solution_count;
            if (mode_ == SearchMode::First) {
                std::vector<Value> assignment;
                assignment.reserve(fixed.size());
                for (const auto& d : fixed.domains()) assignment.push_back(d.min());
                result_.solution = std::move(assignment);
                return true;
            }
            return false;
        }

        const VariableId var{*branch};
        for (Value v : fixed[var]) {
            DomainStore child = fixed;
            child[var].assign(v);
            if (explore(child)) return true;
        }
        return false;
    }

    SearchResult take() { return std::move(result_); }

private:
    Propagator propagator_;
    SearchMode mode_;
    SearchResult result_;
};

}  // namespace

FilterOutcome propagate(const Problem& p, ConsistencyLevel level, const DomainStore& s) {
    return Propagator(p, level).run(s);
}

SearchResult solve(const Problem& p, ConsistencyLevel level, SearchMode mode) {
    const auto start = std::chrono::steady_clock::now();
    Search search(p, level, mode);
    search.explore(p.domains);
    auto result = search.take();
    result.stats.wall_time = std::chrono::steady_clock::now() - start;
    return result;
}

}  // namespace alldiff::engine
