#include "alldiff/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

namespace alldiff::oracle {

namespace {

std::uint64_t saturating_product(const std::vector<std::size_t>& sizes, std::uint64_t cap) {
    std::uint64_t product = 1;
    for (auto sz : sizes) {
        if (sz == 0) return 0;
        if (product > cap / sz) return cap + 1;
        product *= sz;
    }
    return product;
}

class Budget {
public:
    explicit Budget(std::uint64_t limit) : left_(limit) {}
    void spend() {
        if (left_ == 0) throw OracleRefusal("oracle: search budget exhausted");
        --left_;
    }

private:
    std::uint64_t left_;
};

/// Is there a pairwise-distinct tuple with position `fixed_pos` set to
/// `fixed_value` and every other position k drawn from candidates[k]?
bool has_support(std::size_t fixed_pos, Value fixed_value,
                 const std::vector<std::vector<Value>>& candidates, Budget& budget) {
    const std::size_t n = candidates.size();
    std::vector<Value> chosen(n);
    chosen[fixed_pos] = fixed_value;

    std::function<bool(std::size_t)> extend = [&](std::size_t pos) -> bool {
        if (pos == n) return true;
        if (pos == fixed_pos) return extend(pos + 1);
        for (Value v : candidates[pos]) {
            budget.spend();
            bool clash = v == fixed_value;
            for (std::size_t q = 0; q < pos && !clash; ++q) {
                if (q != fixed_pos && chosen[q] == v) clash = true;
            }
            if (clash) continue;
            chosen[pos] = v;
            if (extend(pos + 1)) return true;
        }
        return false;
    };
    return extend(0);
}

std::vector<Value> interval_hull(const Domain& d, std::uint64_t budget) {
    if (span_of(d.min(), d.max()) >= budget) throw OracleRefusal("oracle: interval hull too wide");
    return Domain::range(d.min(), d.max()).values();
}

}  // namespace

SolutionSet enumerate_solutions(const AllDifferentConstraint& c, const DomainStore& s,
                                std::uint64_t budget) {
    SolutionSet out;
    std::vector<std::size_t> sizes;
    for (VariableId v : c.vars) sizes.push_back(s[v].size());
    const auto product = saturating_product(sizes, budget);
    if (product > budget) {
        throw OracleRefusal("enumerate_solutions: " + std::to_string(product) +
                            "+ candidate tuples exceed budget " + std::to_string(budget));
    }
    if (product == 0) return out;

    const std::size_t n = c.vars.size();
    std::vector<std::size_t> digit(n, 0);
    std::vector<Value> tuple(n);
    for (;;) {
        for (std::size_t k = 0; k < n; ++k) tuple[k] = s[c.vars[k]].values()[digit[k]];
        bool distinct = true;
        for (std::size_t a = 0; a < n && distinct; ++a) {
            for (std::size_t b = a + 1; b < n && distinct; ++b) distinct = tuple[a] != tuple[b];
        }
        if (distinct) out.tuples.push_back(tuple);

        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++digit[k] < sizes[k]) break;
            digit[k] = 0;
            if (k == 0) return out;
        }
        if (n == 0) return out;
    }
}

FilterOutcome oracle_filter(const AllDifferentConstraint& c, const DomainStore& s,
                            ConsistencyLevel level, std::uint64_t budget) {
    DomainStore store = s;
    for (VariableId v : c.vars) {
        if (store[v].empty()) return FilterOutcome::infeasible(to_string(v) + " has an empty domain");
    }
    Budget nodes(budget);
    const std::size_t n = c.vars.size();

    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            Domain& di = store[c.vars[i]];
            std::vector<Value> doomed;

            if (level == ConsistencyLevel::DecompAC) {
                // x_i != x_j on its own: d needs some other value in D_j.
                for (Value d : di) {
                    for (std::size_t j = 0; j < n; ++j) {
                        if (j == i) continue;
                        const Domain& dj = store[c.vars[j]];
                        bool supported = std::any_of(dj.begin(), dj.end(),
                                                     [&](Value e) { return e != d; });
                        if (!supported) {
                            doomed.push_back(d);
                            break;
                        }
                    }
                }
            } else {
                std::vector<std::vector<Value>> candidates(n);
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == i) continue;
                    const Domain& dj = store[c.vars[j]];
                    candidates[j] = level == ConsistencyLevel::HyperArc ? dj.values()
                                                                        : interval_hull(dj, budget);
                }
                std::vector<Value> tested;
                if (level == ConsistencyLevel::Bound) {
                    tested = {di.min(), di.max()};
                    if (di.min() == di.max()) tested.pop_back();
                } else {
                    tested = di.values();
                }
                for (Value d : tested) {
                    if (!has_support(i, d, candidates, nodes)) doomed.push_back(d);
                }
            }

            for (Value d : doomed) di.erase(d);
            if (!doomed.empty()) changed = true;
            if (di.empty()) {
                return FilterOutcome::infeasible(to_string(c.vars[i]) + " has no supported value");
            }
        }
    }
    return FilterOutcome::fixpoint(std::move(store));
}

FilterOutcome relational_filter(const std::vector<decomp::Disequality>& diseqs,
                                const DomainStore& s, std::uint64_t budget) {
    std::vector<std::size_t> vars;
    for (const auto& d : diseqs) {
        vars.push_back(d.a.index);
        vars.push_back(d.b.index);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

    std::vector<std::size_t> sizes;
    for (auto i : vars) sizes.push_back(s[VariableId{i}].size());
    if (saturating_product(sizes, budget) > budget) {
        throw OracleRefusal("relational_filter: too many candidate assignments");
    }
    for (auto i : vars) {
        if (s[VariableId{i}].empty()) {
            return FilterOutcome::infeasible(to_string(VariableId{i}) + " has an empty domain");
        }
    }

    std::vector<std::size_t> slot(s.size(), 0);
    for (std::size_t k = 0; k < vars.size(); ++k) slot[vars[k]] = k;
    std::vector<std::set<Value>> supported(vars.size());
    std::vector<std::size_t> digit(vars.size(), 0);
    std::vector<Value> value(vars.size());
    bool any = false;

    for (bool more = !vars.empty(); more;) {
        for (std::size_t k = 0; k < vars.size(); ++k) value[k] = s[VariableId{vars[k]}].values()[digit[k]];
        bool ok = std::all_of(diseqs.begin(), diseqs.end(), [&](const decomp::Disequality& d) {
            return value[slot[d.a.index]] != value[slot[d.b.index]];
        });
        if (ok) {
            any = true;
            for (std::size_t k = 0; k < vars.size(); ++k) supported[k].insert(value[k]);
        }
        more = false;
        for (std::size_t k = vars.size(); k-- > 0;) {
            if (++digit[k] < sizes[k]) {
                more = true;
                break;
            }
            digit[k] = 0;
        }
    }

    DomainStore store = s;
    if (vars.empty()) return FilterOutcome::fixpoint(std::move(store));
    if (!any) return FilterOutcome::infeasible("no assignment satisfies every disequality");
    for (std::size_t k = 0; k < vars.size(); ++k) {
        store[VariableId{vars[k]}] =
            Domain(std::vector<Value>(supported[k].begin(), supported[k].end()));
    }
    return FilterOutcome::fixpoint(std::move(store));
}

std::vector<regin::Matching> enumerate_maximum_matchings(const regin::ValueGraph& g) {
    if (g.var_count() > 8) {
        throw OracleRefusal("enumerate_maximum_matchings: more than 8 variable nodes");
    }
    const std::size_t n = g.var_count();
    std::vector<regin::Matching> best;
    std::size_t best_size = 0;
    regin::Matching current(n, g.value_count());
    std::vector<bool> used(g.value_count(), false);
    std::vector<std::int32_t> pick(n, regin::Matching::kFree);

    std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t u, std::size_t size) {
        if (size + (n - u) < best_size) return;
        if (u == n) {
            if (size > best_size) {
                best.clear();
                best_size = size;
            }
            regin::Matching m(n, g.value_count());
            for (std::size_t k = 0; k < n; ++k) {
                if (pick[k] != regin::Matching::kFree) m.add(k, pick[k]);
            }
            best.push_back(std::move(m));
            return;
        }
        for (auto v : g.neighbours(u)) {
            if (used[v]) continue;
            used[v] = true;
            pick[u] = static_cast<std::int32_t>(v);
            visit(u + 1, size + 1);
            pick[u] = regin::Matching::kFree;
            used[v] = false;
        }
        visit(u + 1, size);
    };
    visit(0, 0);
    return best;
}

std::optional<std::vector<VariableId>> hall_violation(const AllDifferentConstraint& c,
                                                      const DomainStore& s) {
    const std::size_t n = c.vars.size();
    if (n > 12) throw OracleRefusal("hall_violation: more than 12 variables");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::set<Value> values;
        for (std::size_t k = 0; k < n; ++k) {
            if (mask & (1u << k)) values.insert(s[c.vars[k]].begin(), s[c.vars[k]].end());
        }
        if (static_cast<std::size_t>(std::popcount(mask)) > values.size()) {
            std::vector<VariableId> subset;
            for (std::size_t k = 0; k < n; ++k) {
                if (mask & (1u << k)) subset.push_back(c.vars[k]);
            }
            return subset;
        }
    }
    return std::nullopt;
}

std::uint64_t count_problem_solutions(const Problem& p, std::uint64_t budget) {
    if (!validate(p).empty()) throw UsageError("count_problem_solutions: invalid problem");
    std::vector<std::vector<std::size_t>> constraints_of(p.n);
    for (std::size_t ci = 0; ci < p.constraints.size(); ++ci) {
        for (VariableId v : p.constraints[ci].vars) constraints_of[v.index].push_back(ci);
    }
    std::vector<Value> value(p.n);
    Budget nodes(budget);
    std::uint64_t count = 0;

    auto consistent = [&](std::size_t i) {
        for (std::size_t ci : constraints_of[i]) {
            for (VariableId w : p.constraints[ci].vars) {
                if (w.index < i && value[w.index] == value[i]) return false;
            }
        }
        for (const auto& ch : p.channels) {
            const auto lo = std::max(ch.base.index, ch.derived.index);
            if (lo != i) continue;
            if (value[ch.derived.index] != value[ch.base.index] + ch.offset) return false;
        }
        return true;
    };

    std::function<void(std::size_t)> assign = [&](std::size_t i) {
        if (i == p.n) {
            ++count;
            return;
        }
        for (Value v : p.domains[VariableId{i}]) {
            nodes.spend();
            value[i] = v;
            if (consistent(i)) assign(i + 1);
        }
    };
    assign(0);
    return count;
}

}  // namespace alldiff::oracle
