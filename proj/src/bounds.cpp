#include "alldiff/bounds.hpp"

#include "interval_scan.hpp"

namespace alldiff::bounds {

namespace {

std::string describe(const HallInterval& h) {
    return std::to_string(h.members.size()) + " variables inside [" + std::to_string(h.lo) + "," +
           std::to_string(h.hi) + "]";
}

}  // namespace

HallIntervalScan find_hall_intervals(const AllDifferentConstraint& c, const DomainStore& s) {
    for (VariableId v : c.vars) {
        if (s[v].empty()) throw UsageError("find_hall_intervals: empty domain");
    }
    const auto bounds = detail::collect_bounds(c, s);
    HallIntervalScan scan;
    detail::scan_candidate_intervals(bounds, [&](Value a, Value b, std::size_t inside) {
        if (detail::exceeds_width(inside, a, b)) {
            scan.intervals.clear();
            scan.witness = HallInterval{a, b, detail::members_of(bounds, a, b)};
            return false;
        }
        if (detail::matches_width(inside, a, b)) {
            scan.intervals.push_back({a, b, detail::members_of(bounds, a, b)});
        }
        return true;
    });
    return scan;
}

FilterOutcome bc_filter(const AllDifferentConstraint& c, const DomainStore& s) {
    DomainStore store = s;
    for (VariableId v : c.vars) {
        if (store[v].empty()) return FilterOutcome::infeasible(to_string(v) + " has an empty domain");
    }
    std::vector<bool> in_hall(store.size(), false);
    for (;;) {
        auto scan = find_hall_intervals(c, store);
        if (scan.witness) return FilterOutcome::infeasible(describe(*scan.witness));

        bool changed = false;
        for (const auto& hall : scan.intervals) {
            for (VariableId m : hall.members) in_hall[m.index] = true;
            for (VariableId v : c.vars) {
                if (in_hall[v.index]) continue;
                Domain& d = store[v];
                bool min_inside = d.min() >= hall.lo && d.min() <= hall.hi;
                bool max_inside = d.max() >= hall.lo && d.max() <= hall.hi;
                if (!min_inside && !max_inside) continue;
                // The values of d inside the interval form a prefix or a suffix.
                d.erase_range(hall.lo, hall.hi);
                changed = true;
                if (d.empty()) {
                    return FilterOutcome::infeasible(to_string(v) + " emptied by Hall interval [" +
                                                     std::to_string(hall.lo) + "," +
                                                     std::to_string(hall.hi) + "]");
                }
            }
            for (VariableId m : hall.members) in_hall[m.index] = false;
        }
        if (!changed) break;
    }
    return FilterOutcome::fixpoint(std::move(store));
}

}  // namespace alldiff::bounds
