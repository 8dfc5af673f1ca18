#include "alldiff/regin.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#include "alldiff/scc.hpp"

namespace alldiff::regin {

std::optional<std::size_t> ValueGraph::value_index(Value v) const {
    auto it = std::lower_bound(values_.begin(), values_.end(), v);
    if (it == values_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - values_.begin());
}

std::vector<Edge> ValueGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (std::size_t u = 0; u < var_count(); ++u) {
        for (auto v : neighbours(u)) out.push_back({vars_[u], values_[v]});
    }
    return out;
}

ValueGraph build_value_graph(const AllDifferentConstraint& c, const DomainStore& s) {
    ValueGraph g;
    g.vars_ = c.vars;

    std::size_t m = 0;
    Value lo = std::numeric_limits<Value>::max();
    Value hi = std::numeric_limits<Value>::min();
    for (VariableId v : c.vars) {
        const Domain& d = s[v];
        m += d.size();
        if (!d.empty()) {
            lo = std::min(lo, d.min());
            hi = std::max(hi, d.max());
        }
    }
    g.offsets_.reserve(c.vars.size() + 1);
    g.targets_.reserve(m);

    if (m > 0 && span_of(lo, hi) <= 4 * static_cast<std::uint64_t>(m) + 1024) {
        // Dense value range: direct-address table from value to rank.
        const std::size_t width = span_of(lo, hi) + 1;
        std::vector<std::int32_t> rank(width, -1);
        for (VariableId v : c.vars) {
            for (Value x : s[v]) rank[span_of(lo, x)] = 0;
        }
        for (std::size_t i = 0; i < width; ++i) {
            if (rank[i] < 0) continue;
            rank[i] = static_cast<std::int32_t>(g.values_.size());
            g.values_.push_back(lo + static_cast<Value>(i));
        }
        for (VariableId v : c.vars) {
            for (Value x : s[v]) g.targets_.push_back(static_cast<std::uint32_t>(rank[span_of(lo, x)]));
            g.offsets_.push_back(g.targets_.size());
        }
    } else {
        g.values_.reserve(m);
        for (VariableId v : c.vars) {
            const auto& vals = s[v].values();
            g.values_.insert(g.values_.end(), vals.begin(), vals.end());
        }
        std::sort(g.values_.begin(), g.values_.end());
        g.values_.erase(std::unique(g.values_.begin(), g.values_.end()), g.values_.end());
        for (VariableId v : c.vars) {
            for (Value x : s[v]) {
                auto it = std::lower_bound(g.values_.begin(), g.values_.end(), x);
                g.targets_.push_back(static_cast<std::uint32_t>(it - g.values_.begin()));
            }
            g.offsets_.push_back(g.targets_.size());
        }
    }
    return g;
}

void Matching::add(std::size_t var_pos, std::size_t value_idx) {
    if (var_mate_.at(var_pos) != kFree || value_mate_.at(value_idx) != kFree) {
        throw UsageError("Matching::add: endpoint already matched");
    }
    var_mate_[var_pos] = static_cast<std::int32_t>(value_idx);
    value_mate_[value_idx] = static_cast<std::int32_t>(var_pos);
    ++size_;
}

void Matching::reassign(std::size_t var_pos, std::size_t value_idx) {
    if (var_mate_[var_pos] == kFree) ++size_;
    var_mate_[var_pos] = static_cast<std::int32_t>(value_idx);
    value_mate_[value_idx] = static_cast<std::int32_t>(var_pos);
}

std::vector<Edge> Matching::edges(const ValueGraph& g) const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < var_mate_.size(); ++u) {
        if (var_mate_[u] != kFree) out.push_back({g.vars()[u], g.values()[var_mate_[u]]});
    }
    return out;
}

namespace {

void greedy_start(const ValueGraph& g, Matching& m) {
    for (std::size_t u = 0; u < g.var_count(); ++u) {
        for (auto v : g.neighbours(u)) {
            if (m.mate_of_value(v) == Matching::kFree) {
                m.add(u, v);
                break;
            }
        }
    }
}

}  // namespace

Matching maximum_matching(const ValueGraph& g) {
    const std::size_t n = g.var_count();
    Matching m(n, g.value_count());
    greedy_start(g, m);

    constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> dist(n);
    std::vector<std::size_t> cursor(n);
    std::vector<std::uint32_t> queue;
    std::vector<std::uint32_t> path;
    queue.reserve(n);

    for (;;) {
        // Layer the variables by alternating distance from the free ones.
        queue.clear();
        for (std::uint32_t u = 0; u < n; ++u) {
            if (m.mate_of_var(u) == Matching::kFree) {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = kInf;
            }
        }
        std::uint32_t free_layer = kInf;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint32_t u = queue[head];
            if (dist[u] >= free_layer) break;
            for (auto v : g.neighbours(u)) {
                const auto w = m.mate_of_value(v);
                if (w == Matching::kFree) {
                    free_layer = std::min(free_layer, dist[u] + 1);
                } else if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(static_cast<std::uint32_t>(w));
                }
            }
        }
        if (free_layer == kInf) break;

        // Vertex-disjoint shortest augmenting paths along the layers.
        for (std::size_t u = 0; u < n; ++u) cursor[u] = g.first_edge(u);
        for (std::uint32_t root = 0; root < n; ++root) {
            if (m.mate_of_var(root) != Matching::kFree || dist[root] != 0) continue;
            path.assign(1, root);
            while (!path.empty()) {
                const std::uint32_t u = path.back();
                if (cursor[u] == g.end_edge(u)) {
                    dist[u] = kInf;
                    path.pop_back();
                    if (!path.empty()) ++cursor[path.back()];
                    continue;
                }
                const auto v = g.edge_target(cursor[u]);
                const auto w = m.mate_of_value(v);
                if (w == Matching::kFree) {
                    if (dist[u] + 1 != free_layer) {
                        ++cursor[u];
                        continue;
                    }
                    for (auto p : path) m.reassign(p, g.edge_target(cursor[p]));
                    for (auto p : path) dist[p] = kInf;
                    break;
                }
                if (dist[w] != kInf && dist[w] == dist[u] + 1) {
                    path.push_back(static_cast<std::uint32_t>(w));
                } else {
                    ++cursor[u];
                }
            }
        }
    }
    return m;
}

Matching augmenting_path_matching(const ValueGraph& g) {
    const std::size_t n = g.var_count();
    Matching m(n, g.value_count());
    std::vector<std::size_t> seen(g.value_count(), 0);
    std::vector<std::size_t> cursor(n);
    std::vector<std::uint32_t> path;

    for (std::uint32_t root = 0; root < n; ++root) {
        const std::size_t stamp = root + 1;
        path.assign(1, root);
        cursor[root] = g.first_edge(root);
        while (!path.empty()) {
            const std::uint32_t u = path.back();
            if (cursor[u] == g.end_edge(u)) {
                path.pop_back();
                if (!path.empty()) ++cursor[path.back()];
                continue;
            }
            const auto v = g.edge_target(cursor[u]);
            if (seen[v] == stamp) {
                ++cursor[u];
                continue;
            }
            seen[v] = stamp;
            const auto w = m.mate_of_value(v);
            if (w == Matching::kFree) {
                for (auto p : path) m.reassign(p, g.edge_target(cursor[p]));
                break;
            }
            cursor[w] = g.first_edge(w);
            path.push_back(static_cast<std::uint32_t>(w));
        }
    }
    return m;
}

namespace {

void check_covering_matching(const ValueGraph& g, const Matching& m) {
    if (!m.covers_variables()) {
        throw UsageError("mark_removable_edges: matching covers " + std::to_string(m.size()) +
                         " of " + std::to_string(g.var_count()) + " variables");
    }
    for (std::size_t u = 0; u < g.var_count(); ++u) {
        const auto v = m.mate_of_var(u);
        auto nb = g.neighbours(u);
        if (v < 0 || static_cast<std::size_t>(v) >= g.value_count() ||
            !std::binary_search(nb.begin(), nb.end(), static_cast<std::uint32_t>(v)) ||
            m.mate_of_value(v) != static_cast<std::int32_t>(u)) {
            throw UsageError("mark_removable_edges: matching is not a matching of this graph");
        }
    }
}

/// keep[e] for every edge e of g: true iff e lies in some maximum matching.
///
/// Orientation: matched edges point variable -> value, the others value ->
/// variable. An unmatched edge (x, d) survives when d is reachable from a
/// free value (even alternating path) or x and d share a strongly connected
/// component (even alternating cycle).
std::vector<bool> vital_edges(const ValueGraph& g, const Matching& m) {
    const std::size_t n = g.var_count();
    const std::size_t k = g.value_count();

    CsrGraph dg;
    dg.offsets.assign(n + k + 1, 0);
    for (std::size_t u = 0; u < n; ++u) {
        dg.offsets[u + 1] = 1;
        for (auto v : g.neighbours(u)) {
            if (static_cast<std::int32_t>(v) != m.mate_of_var(u)) ++dg.offsets[n + v + 1];
        }
    }
    for (std::size_t i = 1; i < dg.offsets.size(); ++i) dg.offsets[i] += dg.offsets[i - 1];
    dg.targets.resize(dg.offsets.back());
    std::vector<std::size_t> fill(dg.offsets.begin(), dg.offsets.end() - 1);
    for (std::uint32_t u = 0; u < n; ++u) {
        dg.targets[fill[u]++] = static_cast<std::uint32_t>(n + m.mate_of_var(u));
        for (auto v : g.neighbours(u)) {
            if (static_cast<std::int32_t>(v) != m.mate_of_var(u)) dg.targets[fill[n + v]++] = u;
        }
    }

    std::vector<bool> reached(n + k, false);
    std::deque<std::uint32_t> frontier;
    for (std::size_t v = 0; v < k; ++v) {
        if (m.mate_of_value(v) == Matching::kFree) {
            reached[n + v] = true;
            frontier.push_back(static_cast<std::uint32_t>(n + v));
        }
    }
    while (!frontier.empty()) {
        const auto x = frontier.front();
        frontier.pop_front();
        for (std::size_t e = dg.offsets[x]; e < dg.offsets[x + 1]; ++e) {
            const auto y = dg.targets[e];
            if (!reached[y]) {
                reached[y] = true;
                frontier.push_back(y);
            }
        }
    }

    const auto scc = strongly_connected_components(dg);
    std::vector<bool> keep(g.edge_count(), false);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t e = g.first_edge(u); e < g.end_edge(u); ++e) {
            const auto v = g.edge_target(e);
            keep[e] = static_cast<std::int32_t>(v) == m.mate_of_var(u) || reached[n + v] ||
                      scc.component[u] == scc.component[n + v];
        }
    }
    return keep;
}

}  // namespace

std::vector<Edge> mark_removable_edges(const ValueGraph& g, const Matching& m) {
    check_covering_matching(g, m);
    const auto keep = vital_edges(g, m);
    std::vector<Edge> out;
    for (std::size_t u = 0; u < g.var_count(); ++u) {
        for (std::size_t e = g.first_edge(u); e < g.end_edge(u); ++e) {
            if (!keep[e]) out.push_back({g.vars()[u], g.values()[g.edge_target(e)]});
        }
    }
    return out;
}

FilterOutcome gac_filter(const AllDifferentConstraint& c, const DomainStore& s) {
    for (VariableId v : c.vars) {
        if (s[v].empty()) return FilterOutcome::infeasible(to_string(v) + " has an empty domain");
    }
    const auto g = build_value_graph(c, s);
    const auto m = maximum_matching(g);
    if (!m.covers_variables()) {
        return FilterOutcome::infeasible("maximum matching covers " + std::to_string(m.size()) +
                                         " of " + std::to_string(g.var_count()) + " variables");
    }
    const auto keep = vital_edges(g, m);

    DomainStore store = s;
    std::vector<Value> kept;
    for (std::size_t u = 0; u < g.var_count(); ++u) {
        const std::size_t first = g.first_edge(u);
        const std::size_t last = g.end_edge(u);
        if (std::all_of(keep.begin() + first, keep.begin() + last, [](bool b) { return b; })) {
            continue;
        }
        kept.clear();
        for (std::size_t e = first; e < last; ++e) {
            if (keep[e]) kept.push_back(g.values()[g.edge_target(e)]);
        }
        store[g.vars()[u]] = Domain(kept);
    }
    return FilterOutcome::fixpoint(std::move(store));
}

std::string dump_value_graph(const ValueGraph& g, const Matching& m,
                             std::span<const std::string> names) {
    if (m.var_count() != g.var_count()) throw UsageError("dump_value_graph: matching/graph mismatch");
    std::ostringstream os;
    for (std::size_t u = 0; u < g.var_count(); ++u) {
        const VariableId var = g.vars()[u];
        os << (var.index < names.size() ? names[var.index] : to_string(var)) << ": ";
        const auto mate = m.mate_of_var(u);
        if (mate == Matching::kFree) {
            os << '-';
        } else {
            os << g.values()[mate];
        }
        os << " |";
        for (auto v : g.neighbours(u)) {
            if (static_cast<std::int32_t>(v) != mate) os << ' ' << g.values()[v];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace alldiff::regin
