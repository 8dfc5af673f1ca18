#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "alldiff/model.hpp"

namespace alldiff::detail {

struct VarBounds {
    VariableId var;
    Value lo;
    Value hi;
};

/// Requires every domain of c to be non-empty.
inline std::vector<VarBounds> collect_bounds(const AllDifferentConstraint& c, const DomainStore& s) {
    std::vector<VarBounds> out;
    out.reserve(c.vars.size());
    for (VariableId v : c.vars) out.push_back({v, s[v].min(), s[v].max()});
    return out;
}

/// Visits every interval [a, b] with a drawn from the domain minima and b
/// from the domain maxima, a <= b, together with |K_[a,b]| (the number of
/// variables whose bounds lie inside). Intervals with an empty K are skipped.
/// The visitor returns false to stop the scan. O(n^2) after sorting.
template <typename Visitor>
void scan_candidate_intervals(const std::vector<VarBounds>& bounds, Visitor&& visit) {
    std::vector<Value> starts;
    starts.reserve(bounds.size());
    for (const auto& b : bounds) starts.push_back(b.lo);
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

    std::vector<const VarBounds*> by_hi;
    by_hi.reserve(bounds.size());
    for (const auto& b : bounds) by_hi.push_back(&b);
    std::sort(by_hi.begin(), by_hi.end(),
              [](const VarBounds* x, const VarBounds* y) { return x->hi < y->hi; });

    for (Value a : starts) {
        std::size_t inside = 0;
        std::size_t k = 0;
        while (k < by_hi.size()) {
            Value b = by_hi[k]->hi;
            for (; k < by_hi.size() && by_hi[k]->hi == b; ++k) {
                if (by_hi[k]->lo >= a) ++inside;
            }
            if (b < a || inside == 0) continue;
            if (!visit(a, b, inside)) return;
        }
    }
}

inline std::vector<VariableId> members_of(const std::vector<VarBounds>& bounds, Value a, Value b) {
    std::vector<VariableId> out;
    for (const auto& vb : bounds) {
        if (vb.lo >= a && vb.hi <= b) out.push_back(vb.var);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// |K| compared with |[a, b]| without forming b - a + 1.
inline bool exceeds_width(std::size_t count, Value a, Value b) { return count - 1 > span_of(a, b); }
inline bool matches_width(std::size_t count, Value a, Value b) { return count - 1 == span_of(a, b); }

}  // namespace alldiff::detail
