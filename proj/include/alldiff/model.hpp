#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace alldiff {

using Value = std::int64_t;

/// Raised when an API is called outside its contract (arity mismatch,
/// mismatched store shapes, violated preconditions).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense zero-based index of a variable within a Problem.
struct VariableId {
    std::size_t index = 0;

    friend constexpr auto operator<=>(VariableId, VariableId) = default;
};

/// "x<index+1>", matching the 1-based naming used in diagnostics.
std::string to_string(VariableId v);

/// Finite set of integer values, kept sorted ascending and duplicate-free.
class Domain {
public:
    Domain() = default;
    Domain(std::initializer_list<Value> values);
    explicit Domain(std::vector<Value> values);

    /// All values in [lo, hi]; empty when lo > hi.
    static Domain range(Value lo, Value hi);

    bool empty() const { return values_.empty(); }
    std::size_t size() const { return values_.size(); }
    Value min() const;
    Value max() const;
    bool fixed() const { return values_.size() == 1; }
    bool contains(Value v) const;
    bool is_subset_of(const Domain& other) const;

    /// True when the domain holds every value between its min and max.
    bool is_contiguous() const;

    const std::vector<Value>& values() const { return values_; }
    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    bool erase(Value v);
    /// Removes every value in [lo, hi]; returns the number removed.
    std::size_t erase_range(Value lo, Value hi);
    /// Keeps only the values also present in `other`; returns the number removed.
    std::size_t intersect(const Domain& other);
    void assign(Value v);

    Domain shifted(Value offset) const;

    friend bool operator==(const Domain&, const Domain&) = default;

private:
    std::vector<Value> values_;
};

std::string to_string(const Domain& d);

enum class StoreOrdering { Smaller, Equal, Larger, Incomparable };

std::string_view to_string(StoreOrdering o);

/// Per-variable domains indexed by VariableId.
class DomainStore {
public:
    DomainStore() = default;
    explicit DomainStore(std::size_t n) : domains_(n) {}
    explicit DomainStore(std::vector<Domain> domains) : domains_(std::move(domains)) {}

    std::size_t size() const { return domains_.size(); }
    Domain& operator[](VariableId v) { return domains_.at(v.index); }
    const Domain& operator[](VariableId v) const { return domains_.at(v.index); }

    /// A store with any empty domain is the failed CSP.
    bool failed() const;
    /// Sum of domain sizes.
    std::size_t total_size() const;
    bool all_fixed() const;

    const std::vector<Domain>& domains() const { return domains_; }

    friend bool operator==(const DomainStore&, const DomainStore&) = default;

private:
    std::vector<Domain> domains_;
};

/// Partial order on stores of the same shape. Any failed store is the
/// smallest element; two failed stores are Equal.
StoreOrdering compare_stores(const DomainStore& a, const DomainStore& b);

/// a ⪯ b, i.e. Smaller or Equal.
bool store_leq(const DomainStore& a, const DomainStore& b);

struct AllDifferentConstraint {
    std::vector<VariableId> vars;

    std::size_t arity() const { return vars.size(); }
    friend bool operator==(const AllDifferentConstraint&, const AllDifferentConstraint&) = default;
};

/// True iff every pair of values in `tuple` is distinct.
bool is_solution(const AllDifferentConstraint& c, std::span<const Value> tuple);

/// derived = base + offset, kept in sync by the engine. Lets generators
/// express shifted copies of a variable (e.g. n-queens diagonals) without
/// adding a second constraint kind.
struct OffsetChannel {
    VariableId base;
    VariableId derived;
    Value offset = 0;

    friend bool operator==(const OffsetChannel&, const OffsetChannel&) = default;
};

struct Problem {
    std::size_t n = 0;
    DomainStore domains;
    std::vector<AllDifferentConstraint> constraints;
    std::vector<OffsetChannel> channels;
    /// Optional display names, one per variable when present.
    std::vector<std::string> names;

    std::string name_of(VariableId v) const;

    friend bool operator==(const Problem&, const Problem&) = default;
};

/// True iff `assignment` (one value per variable) lies in every domain,
/// satisfies every constraint and every channel.
bool is_problem_solution(const Problem& p, std::span<const Value> assignment);

struct ModelError {
    std::optional<std::size_t> constraint;
    std::optional<VariableId> variable;
    std::string message;
};

std::string to_string(const ModelError& e);

/// Structural checks: duplicate variables inside a constraint, dangling ids,
/// constraints with no variables, malformed channels. Empty domains are not
/// an error here.
std::vector<ModelError> validate(const Problem& p);

enum class ConsistencyLevel { DecompAC, Bound, Range, HyperArc };

std::string_view to_string(ConsistencyLevel level);
std::optional<ConsistencyLevel> parse_level(std::string_view name);

inline constexpr ConsistencyLevel kAllLevels[] = {
    ConsistencyLevel::DecompAC, ConsistencyLevel::Bound, ConsistencyLevel::Range,
    ConsistencyLevel::HyperArc};

struct Infeasibility {
    std::optional<std::size_t> constraint;
    std::string diagnostic;
};

/// Result of a filtering algorithm: a fixpoint store without empty domains,
/// or the failed CSP.
class FilterOutcome {
public:
    static FilterOutcome fixpoint(DomainStore store);
    static FilterOutcome infeasible(std::string diagnostic,
                                    std::optional<std::size_t> constraint = std::nullopt);

    bool feasible() const { return std::holds_alternative<DomainStore>(state_); }
    explicit operator bool() const { return feasible(); }

    const DomainStore& store() const;
    DomainStore& store();
    const Infeasibility& reason() const;
    Infeasibility& reason();

private:
    explicit FilterOutcome(std::variant<DomainStore, Infeasibility> s) : state_(std::move(s)) {}
    std::variant<DomainStore, Infeasibility> state_;
};

/// Orders two outcomes by ⪯, treating Infeasible as the failed CSP.
StoreOrdering compare_outcomes(const FilterOutcome& a, const FilterOutcome& b);
bool outcome_leq(const FilterOutcome& a, const FilterOutcome& b);
bool same_outcome(const FilterOutcome& a, const FilterOutcome& b);

/// Number of integers in [lo, hi] minus one, exact for any lo <= hi.
inline std::uint64_t span_of(Value lo, Value hi) {
    return static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
}

}  // namespace alldiff
