#include "alldiff/scc.hpp"

#include <algorithm>
#include <limits>

namespace alldiff {

SccResult strongly_connected_components(const CsrGraph& g) {
    constexpr auto kUnvisited = std::numeric_limits<std::uint32_t>::max();
    const std::size_t n = g.node_count();

    std::vector<std::uint32_t> index(n, kUnvisited);
    std::vector<std::uint32_t> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::uint32_t> stack;
    SccResult result;
    result.component.assign(n, 0);

    struct Frame {
        std::uint32_t node;
        std::size_t next_edge;
    };
    std::vector<Frame> frames;
    std::uint32_t counter = 0;

    auto open = [&](std::uint32_t u) {
        index[u] = low[u] = counter++;
        stack.push_back(u);
        on_stack[u] = true;
        frames.push_back({u, g.offsets[u]});
    };

    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        open(root);
        while (!frames.empty()) {
            const std::uint32_t u = frames.back().node;
            const std::size_t pos = frames.back().next_edge;
            if (pos < g.offsets[u + 1]) {
                ++frames.back().next_edge;
                const std::uint32_t w = g.targets[pos];
                if (index[w] == kUnvisited) {
                    open(w);
                } else if (on_stack[w]) {
                    low[u] = std::min(low[u], index[w]);
                }
                continue;
            }
            frames.pop_back();
            if (low[u] == index[u]) {
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    result.component[w] = static_cast<std::uint32_t>(result.count);
                } while (w != u);
                ++result.count;
            }
            if (!frames.empty()) {
                const std::uint32_t parent = frames.back().node;
                low[parent] = std::min(low[parent], low[u]);
            }
        }
    }
    return result;
}

}  // namespace alldiff
