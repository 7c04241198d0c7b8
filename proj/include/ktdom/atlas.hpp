#pragma once

#include "ktdom/graph.hpp"

#include <string_view>

namespace ktdom::atlas {

/// Heawood graph, built from its LCF notation [5,-5]^7.
Graph heawood();

/// Point/line incidence graph of PG(2,q); points are 0..q²+q, lines follow.
/// q must be one of 2, 3, 4, 5, 7, 8, 9.
Graph projective_plane_incidence(std::size_t q);

/// Diameter-2 Moore graph of degree r: C5 (r=2), Petersen (r=3) or
/// Hoffman–Singleton (r=7).
Graph moore_graph(std::size_t r);

/// 1 + r·Σ_{i<d} (r-1)^i
std::size_t moore_order(std::size_t r, std::size_t d);

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph hypercube(std::size_t d);
/// C_n × K_2
Graph prism(std::size_t n);
Graph petersen();

/// Parses "heawood", "petersen", "pg2:<q>", "moore:<r>", "cycle:<n>",
/// "path:<n>", "complete:<n>", "kbip:<a>,<b>", "hypercube:<d>", "prism:<n>".
Graph named(std::string_view spec);

} // namespace ktdom::atlas
