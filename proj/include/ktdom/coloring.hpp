#pragma once

#include "ktdom/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace ktdom {

using Color = std::uint32_t;

struct Coloring {
    std::vector<Color> assignment;  // per vertex
    std::size_t num_colors = 0;
    std::vector<VertexSet> classes; // classes[c] = vertices coloured c

    /// Packs the colour indices used by `assignment` into 0..c-1, keeping
    /// their relative order, and builds the class inventory.
    static Coloring from_assignment(std::vector<Color> assignment);
};

/// No edge of g joins two vertices of equal colour.
bool is_proper(const Graph& g, const Coloring& col);

/// First-fit colouring: each vertex in `order` takes the smallest colour not
/// already on a neighbour. `order` must be a permutation of 0..n-1.
Coloring greedy_coloring(const Graph& g, std::span<const Vertex> order);

/// Constructive Brooks colouring. A connected component that is neither
/// complete nor an odd cycle gets at most Δ(component) colours; K_m gets m,
/// odd cycles get 3. Deterministic.
Coloring brooks_coloring(const Graph& g);

/// Components of g that induce a complete graph on exactly `size` vertices.
std::vector<VertexSet> find_complete_components(const Graph& g, std::size_t size);

} // namespace ktdom
