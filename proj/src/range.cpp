#include "alldiff/range.hpp"

#include <algorithm>

#include "interval_scan.hpp"

namespace alldiff::range {

namespace {

HallSet tightened(const std::vector<detail::VarBounds>& bounds, Value a, Value b) {
    HallSet set{detail::members_of(bounds, a, b), b, a};
    for (const auto& vb : bounds) {
        if (vb.lo >= a && vb.hi <= b) {
            set.lo = std::min(set.lo, vb.lo);
            set.hi = std::max(set.hi, vb.hi);
        }
    }
    return set;
}

}  // namespace

HallSetScan find_hall_sets(const AllDifferentConstraint& c, const DomainStore& s) {
    for (VariableId v : c.vars) {
        if (s[v].empty()) throw UsageError("find_hall_sets: empty domain");
    }
    const auto bounds = detail::collect_bounds(c, s);
    HallSetScan scan;
    detail::scan_candidate_intervals(bounds, [&](Value a, Value b, std::size_t inside) {
        if (detail::exceeds_width(inside, a, b)) {
            scan.sets.clear();
            scan.overflow = tightened(bounds, a, b);
            return false;
        }
        if (!detail::matches_width(inside, a, b)) return true;
        // K fits in I_K ⊆ [a,b]; since |K| <= |I_K| is already known, the
        // tightened interval is [a,b] itself.
        scan.sets.push_back(tightened(bounds, a, b));
        return true;
    });
    return scan;
}

FilterOutcome rc_filter(const AllDifferentConstraint& c, const DomainStore& s) {
    DomainStore store = s;
    for (VariableId v : c.vars) {
        if (store[v].empty()) return FilterOutcome::infeasible(to_string(v) + " has an empty domain");
    }
    std::vector<bool> in_set(store.size(), false);
    for (;;) {
        auto scan = find_hall_sets(c, store);
        if (scan.overflow) {
            return FilterOutcome::infeasible(std::to_string(scan.overflow->members.size()) +
                                             " variables share " +
                                             std::to_string(span_of(scan.overflow->lo,
                                                                    scan.overflow->hi) + 1) +
                                             " values in [" + std::to_string(scan.overflow->lo) +
                                             "," + std::to_string(scan.overflow->hi) + "]");
        }
        bool changed = false;
        for (const auto& set : scan.sets) {
            for (VariableId m : set.members) in_set[m.index] = true;
            for (VariableId v : c.vars) {
                if (in_set[v.index]) continue;
                Domain& d = store[v];
                if (d.erase_range(set.lo, set.hi) == 0) continue;
                changed = true;
                if (d.empty()) {
                    return FilterOutcome::infeasible(to_string(v) + " emptied by Hall set on [" +
                                                     std::to_string(set.lo) + "," +
                                                     std::to_string(set.hi) + "]");
                }
            }
            for (VariableId m : set.members) in_set[m.index] = false;
        }
        if (!changed) break;
    }
    return FilterOutcome::fixpoint(std::move(store));
}

}  // namespace alldiff::range
