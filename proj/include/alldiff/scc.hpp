#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace alldiff {

/// Directed graph in compressed adjacency form: the successors of node u
/// are targets[offsets[u] .. offsets[u+1]).
struct CsrGraph {
    std::vector<std::size_t> offsets{0};
    std::vector<std::uint32_t> targets;

    std::size_t node_count() const { return offsets.size() - 1; }
    std::size_t edge_count() const { return targets.size(); }
};

struct SccResult {
    /// Component id per node. Ids follow Tarjan's completion order, which is
    /// a reverse topological order of the condensation.
    std::vector<std::uint32_t> component;
    std::size_t count = 0;
};

/// Tarjan's algorithm with an explicit stack; O(nodes + edges).
SccResult strongly_connected_components(const CsrGraph& g);

}  // namespace alldiff
