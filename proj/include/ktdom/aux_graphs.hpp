#pragma once

#include "ktdom/graph.hpp"

namespace ktdom {

/// G': same vertices as g, u ~ v iff u != v share a neighbour in g.
/// Vertices with no partner stay isolated so colourings map back by identity.
Graph common_neighbor_graph(const Graph& g);

/// G'': the square of g, i.e. E(g) ∪ E(G').
Graph closed_square_graph(const Graph& g);

} // namespace ktdom
