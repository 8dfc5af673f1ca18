#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alldiff/model.hpp"

namespace alldiff::regin {

struct Edge {
    VariableId var;
    Value value;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Bipartite variable/value graph of one alldifferent constraint. Variables
/// are addressed by their position in the constraint, values by their rank
/// in the sorted union of domains. Each variable's neighbours are ascending.
class ValueGraph {
public:
    std::size_t var_count() const { return vars_.size(); }
    std::size_t value_count() const { return values_.size(); }
    std::size_t edge_count() const { return targets_.size(); }

    const std::vector<VariableId>& vars() const { return vars_; }
    const std::vector<Value>& values() const { return values_; }

    std::span<const std::uint32_t> neighbours(std::size_t var_pos) const {
        return {targets_.data() + offsets_[var_pos], targets_.data() + offsets_[var_pos + 1]};
    }
    /// Index range of var_pos's edges in the global edge numbering.
    std::size_t first_edge(std::size_t var_pos) const { return offsets_[var_pos]; }
    std::size_t end_edge(std::size_t var_pos) const { return offsets_[var_pos + 1]; }
    std::uint32_t edge_target(std::size_t edge) const { return targets_[edge]; }

    std::optional<std::size_t> value_index(Value v) const;

    /// All edges in (constraint position, ascending value) order.
    std::vector<Edge> edges() const;

    friend ValueGraph build_value_graph(const AllDifferentConstraint& c, const DomainStore& s);

private:
    std::vector<VariableId> vars_;
    std::vector<Value> values_;
    std::vector<std::size_t> offsets_{0};
    std::vector<std::uint32_t> targets_;
};

ValueGraph build_value_graph(const AllDifferentConstraint& c, const DomainStore& s);

/// Matching in a ValueGraph, stored as mates on both sides.
class Matching {
public:
    static constexpr std::int32_t kFree = -1;

    Matching() = default;
    Matching(std::size_t var_count, std::size_t value_count)
        : var_mate_(var_count, kFree), value_mate_(value_count, kFree) {}

    std::size_t size() const { return size_; }
    std::size_t var_count() const { return var_mate_.size(); }
    bool covers_variables() const { return size_ == var_mate_.size(); }

    /// Value index matched to the variable at `var_pos`, or kFree.
    std::int32_t mate_of_var(std::size_t var_pos) const { return var_mate_[var_pos]; }
    std::int32_t mate_of_value(std::size_t value_idx) const { return value_mate_[value_idx]; }

    /// Both endpoints must be free.
    void add(std::size_t var_pos, std::size_t value_idx);
    /// Re-points var_pos at value_idx along an augmenting path; value_idx
    /// must be free or about to be released by its current mate.
    void reassign(std::size_t var_pos, std::size_t value_idx);

    std::vector<Edge> edges(const ValueGraph& g) const;

    friend bool operator==(const Matching&, const Matching&) = default;

private:
    std::vector<std::int32_t> var_mate_;
    std::vector<std::int32_t> value_mate_;
    std::size_t size_ = 0;
};

/// Hopcroft-Karp, O(sqrt(|X|) m). Deterministic: greedy start and layered
/// search both scan variables by position and values ascending.
Matching maximum_matching(const ValueGraph& g);

/// Plain augmenting-path search, O(|X| m). Kept as an independent route;
/// the matching may differ from Hopcroft-Karp but has the same size.
Matching augmenting_path_matching(const ValueGraph& g);

/// Edges that belong to no maximum matching. `m` must be a matching of `g`
/// covering every variable; throws UsageError otherwise.
std::vector<Edge> mark_removable_edges(const ValueGraph& g, const Matching& m);

/// Hyper-arc consistency: infeasible iff the maximum matching leaves a
/// variable uncovered, otherwise every edge outside all maximum matchings
/// is removed from the domains.
FilterOutcome gac_filter(const AllDifferentConstraint& c, const DomainStore& s);

/// One line per variable: "name: matched | other values". Unmatched
/// variables print "-" before the bar. `names` is indexed by VariableId;
/// variables beyond it print as x<i>.
std::string dump_value_graph(const ValueGraph& g, const Matching& m,
                             std::span<const std::string> names = {});

}  // namespace alldiff::regin
