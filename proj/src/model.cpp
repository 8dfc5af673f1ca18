#include "alldiff/model.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace alldiff {

std::string to_string(VariableId v) { return "x" + std::to_string(v.index + 1); }

Domain::Domain(std::initializer_list<Value> values) : Domain(std::vector<Value>(values)) {}

Domain::Domain(std::vector<Value> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

Domain Domain::range(Value lo, Value hi) {
    Domain d;
    if (lo > hi) return d;
    d.values_.reserve(span_of(lo, hi) + 1);
    for (Value v = lo;; ++v) {
        d.values_.push_back(v);
        if (v == hi) break;
    }
    return d;
}

Value Domain::min() const {
    if (values_.empty()) throw UsageError("min of empty domain");
    return values_.front();
}

Value Domain::max() const {
    if (values_.empty()) throw UsageError("max of empty domain");
    return values_.back();
}

bool Domain::contains(Value v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
}

bool Domain::is_subset_of(const Domain& other) const {
    return std::includes(other.values_.begin(), other.values_.end(), values_.begin(),
                         values_.end());
}

bool Domain::is_contiguous() const {
    return values_.empty() || span_of(values_.front(), values_.back()) + 1 == values_.size();
}

bool Domain::erase(Value v) {
    auto it = std::lower_bound(values_.begin(), values_.end(), v);
    if (it == values_.end() || *it != v) return false;
    values_.erase(it);
    return true;
}

std::size_t Domain::erase_range(Value lo, Value hi) {
    if (lo > hi) return 0;
    auto first = std::lower_bound(values_.begin(), values_.end(), lo);
    auto last = std::upper_bound(first, values_.end(), hi);
    auto removed = static_cast<std::size_t>(last - first);
    values_.erase(first, last);
    return removed;
}

std::size_t Domain::intersect(const Domain& other) {
    std::vector<Value> kept;
    kept.reserve(std::min(values_.size(), other.values_.size()));
    std::set_intersection(values_.begin(), values_.end(), other.values_.begin(),
                          other.values_.end(), std::back_inserter(kept));
    std::size_t removed = values_.size() - kept.size();
    values_ = std::move(kept);
    return removed;
}

void Domain::assign(Value v) { values_.assign(1, v); }

Domain Domain::shifted(Value offset) const {
    Domain d;
    d.values_.reserve(values_.size());
    for (Value v : values_) d.values_.push_back(v + offset);
    return d;
}

std::string to_string(const Domain& d) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Value v : d) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

std::string_view to_string(StoreOrdering o) {
    switch (o) {
        case StoreOrdering::Smaller: return "Smaller";
        case StoreOrdering::Equal: return "Equal";
        case StoreOrdering::Larger: return "Larger";
        case StoreOrdering::Incomparable: return "Incomparable";
    }
    return "?";
}

bool DomainStore::failed() const {
    return std::any_of(domains_.begin(), domains_.end(),
                       [](const Domain& d) { return d.empty(); });
}

std::size_t DomainStore::total_size() const {
    std::size_t total = 0;
    for (const auto& d : domains_) total += d.size();
    return total;
}

bool DomainStore::all_fixed() const {
    return std::all_of(domains_.begin(), domains_.end(),
                       [](const Domain& d) { return d.fixed(); });
}

StoreOrdering compare_stores(const DomainStore& a, const DomainStore& b) {
    if (a.size() != b.size()) {
        throw UsageError("compare_stores: variable counts differ (" + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()) + ")");
    }
    bool a_failed = a.failed();
    bool b_failed = b.failed();
    if (a_failed || b_failed) {
        if (a_failed && b_failed) return StoreOrdering::Equal;
        return a_failed ? StoreOrdering::Smaller : StoreOrdering::Larger;
    }
    bool a_leq_b = true;
    bool b_leq_a = true;
    for (std::size_t i = 0; i < a.size() && (a_leq_b || b_leq_a); ++i) {
        const Domain& da = a[VariableId{i}];
        const Domain& db = b[VariableId{i}];
        if (da == db) continue;
        if (!da.is_subset_of(db)) a_leq_b = false;
        if (!db.is_subset_of(da)) b_leq_a = false;
    }
    if (a_leq_b && b_leq_a) return StoreOrdering::Equal;
    if (a_leq_b) return StoreOrdering::Smaller;
    if (b_leq_a) return StoreOrdering::Larger;
    return StoreOrdering::Incomparable;
}

bool store_leq(const DomainStore& a, const DomainStore& b) {
    auto o = compare_stores(a, b);
    return o == StoreOrdering::Smaller || o == StoreOrdering::Equal;
}

bool is_solution(const AllDifferentConstraint& c, std::span<const Value> tuple) {
    if (tuple.size() != c.arity()) {
        throw UsageError("is_solution: tuple has " + std::to_string(tuple.size()) +
                         " values, constraint arity is " + std::to_string(c.arity()));
    }
    std::vector<Value> sorted(tuple.begin(), tuple.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::string Problem::name_of(VariableId v) const {
    if (v.index < names.size() && !names[v.index].empty()) return names[v.index];
    return to_string(v);
}

bool is_problem_solution(const Problem& p, std::span<const Value> assignment) {
    if (assignment.size() != p.n) {
        throw UsageError("is_problem_solution: assignment has " +
                         std::to_string(assignment.size()) + " values, problem has " +
                         std::to_string(p.n) + " variables");
    }
    for (std::size_t i = 0; i < p.n; ++i) {
        if (!p.domains[VariableId{i}].contains(assignment[i])) return false;
    }
    for (const auto& c : p.constraints) {
        std::vector<Value> tuple;
        tuple.reserve(c.arity());
        for (VariableId v : c.vars) tuple.push_back(assignment[v.index]);
        if (!is_solution(c, tuple)) return false;
    }
    for (const auto& ch : p.channels) {
        if (assignment[ch.derived.index] != assignment[ch.base.index] + ch.offset) return false;
    }
    return true;
}

std::string to_string(const ModelError& e) {
    std::string out;
    if (e.constraint) out += "constraint " + std::to_string(*e.constraint) + ": ";
    if (e.variable) out += "variable " + std::to_string(e.variable->index) + ": ";
    return out + e.message;
}

std::vector<ModelError> validate(const Problem& p) {
    std::vector<ModelError> errors;
    if (p.domains.size() != p.n) {
        errors.push_back({std::nullopt, std::nullopt,
                          "store holds " + std::to_string(p.domains.size()) +
                              " domains for " + std::to_string(p.n) + " variables"});
    }
    if (!p.names.empty() && p.names.size() != p.n) {
        errors.push_back({std::nullopt, std::nullopt, "name list length differs from n"});
    }
    for (std::size_t ci = 0; ci < p.constraints.size(); ++ci) {
        const auto& c = p.constraints[ci];
        if (c.vars.empty()) {
            errors.push_back({ci, std::nullopt, "constraint has no variables"});
            continue;
        }
        std::unordered_set<std::size_t> seen;
        for (VariableId v : c.vars) {
            if (v.index >= p.n) {
                errors.push_back({ci, v,
                                  "dangling variable id (problem has " + std::to_string(p.n) +
                                      " variables)"});
            } else if (!seen.insert(v.index).second) {
                errors.push_back({ci, v, "duplicate variable"});
            }
        }
    }
    for (const auto& ch : p.channels) {
        if (ch.base.index >= p.n || ch.derived.index >= p.n) {
            errors.push_back({std::nullopt, ch.derived, "channel references a dangling variable"});
        } else if (ch.base == ch.derived) {
            errors.push_back({std::nullopt, ch.derived, "channel links a variable to itself"});
        }
    }
    return errors;
}

std::string_view to_string(ConsistencyLevel level) {
    switch (level) {
        case ConsistencyLevel::DecompAC: return "decomp";
        case ConsistencyLevel::Bound: return "bound";
        case ConsistencyLevel::Range: return "range";
        case ConsistencyLevel::HyperArc: return "gac";
    }
    return "?";
}

std::optional<ConsistencyLevel> parse_level(std::string_view name) {
    for (auto level : kAllLevels) {
        if (to_string(level) == name) return level;
    }
    return std::nullopt;
}

FilterOutcome FilterOutcome::fixpoint(DomainStore store) {
    if (store.failed()) return infeasible("empty domain");
    return FilterOutcome(std::move(store));
}

FilterOutcome FilterOutcome::infeasible(std::string diagnostic,
                                        std::optional<std::size_t> constraint) {
    return FilterOutcome(Infeasibility{constraint, std::move(diagnostic)});
}

const DomainStore& FilterOutcome::store() const {
    if (!feasible()) throw UsageError("FilterOutcome::store on infeasible outcome");
    return std::get<DomainStore>(state_);
}

DomainStore& FilterOutcome::store() {
    if (!feasible()) throw UsageError("FilterOutcome::store on infeasible outcome");
    return std::get<DomainStore>(state_);
}

const Infeasibility& FilterOutcome::reason() const {
    if (feasible()) throw UsageError("FilterOutcome::reason on feasible outcome");
    return std::get<Infeasibility>(state_);
}

Infeasibility& FilterOutcome::reason() {
    if (feasible()) throw UsageError("FilterOutcome::reason on feasible outcome");
    return std::get<Infeasibility>(state_);
}

StoreOrdering compare_outcomes(const FilterOutcome& a, const FilterOutcome& b) {
    if (!a.feasible() || !b.feasible()) {
        if (!a.feasible() && !b.feasible()) return StoreOrdering::Equal;
        return a.feasible() ? StoreOrdering::Larger : StoreOrdering::Smaller;
    }
    return compare_stores(a.store(), b.store());
}

bool outcome_leq(const FilterOutcome& a, const FilterOutcome& b) {
    auto o = compare_outcomes(a, b);
    return o == StoreOrdering::Smaller || o == StoreOrdering::Equal;
}

bool same_outcome(const FilterOutcome& a, const FilterOutcome& b) {
    return compare_outcomes(a, b) == StoreOrdering::Equal;
}

}  // namespace alldiff
