// Single-threaded reference versions of the parallel kernels. Distances use
// a plain queue over adjacency lists rather than bitset frontiers, and cycles
// through pairs come from arc enumeration instead of min-cost flow.

#include <deque>

#include "zdg/oracle.hpp"

namespace zdg::serial {

DistanceMatrix all_pairs_distances(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t u = 0; u < n; ++u) g.neighbors(u).for_each([&](std::size_t v) { adj[u].push_back(v); });
    DistanceMatrix d(n);
    for (std::size_t s = 0; s < n; ++s) {
        d.at(s, s) = 0;
        std::deque<std::size_t> q{s};
        while (!q.empty()) {
            std::size_t x = q.front();
            q.pop_front();
            for (std::size_t y : adj[x]) {
                if (d.at(s, y) != kUnreachable) continue;
                d.at(s, y) = d.at(s, x) + 1;
                q.push_back(y);
            }
        }
    }
    return d;
}

CycleTable all_pairs_cycle_through(const Graph& g) {
    const std::size_t n = g.size();
    CycleTable t(n);
    for (std::size_t u = 0; u < n; ++u) {
        t.at(u, u) = 0;
        for (std::size_t v = u + 1; v < n; ++v) {
            int c = detail::cycle_through_search(g, u, v);
            t.at(u, v) = c;
            t.at(v, u) = c;
        }
    }
    return t;
}

std::vector<int> chordless_cycle_lengths(const Graph& g) {
    std::vector<bool> seen(g.size() + 3, false);
    for (std::size_t s = 0; s < g.size(); ++s) detail::chordless_from(g, s, seen);
    std::vector<int> out;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i]) out.push_back(static_cast<int>(i));
    return out;
}

VertexSet far_five_cycle_vertices(const Graph& g) {
    VertexSet out(g.size());
    for (std::size_t v = 0; v < g.size(); ++v)
        if (detail::on_far_five_cycle(g, v)) out.set(v);
    return out;
}

}  // namespace zdg::serial
