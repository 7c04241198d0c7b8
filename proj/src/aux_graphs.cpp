#include "ktdom/aux_graphs.hpp"

#include <algorithm>

namespace ktdom {

namespace {

// Pairs from every neighbourhood, optionally plus the edges of g itself.
Graph build(const Graph& g, bool include_edges)
{
    std::vector<Edge> pairs;
    for (Vertex w = 0; w < g.order(); ++w) {
        auto nbrs = g.neighbors(w);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                pairs.emplace_back(nbrs[i], nbrs[j]);
    }
    if (include_edges) {
        auto own = g.edges();
        pairs.insert(pairs.end(), own.begin(), own.end());
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return Graph::from_edges(g.order(), pairs);
}

} // namespace

Graph common_neighbor_graph(const Graph& g) { return build(g, false); }

Graph closed_square_graph(const Graph& g) { return build(g, true); }

} // namespace ktdom
