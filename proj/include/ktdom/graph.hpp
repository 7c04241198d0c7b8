#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ktdom {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sentinel returned by distance-like queries on disconnected or acyclic graphs.
inline constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();

/// Subset of the dense vertex range 0..n-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : member_(universe, 0) {}

    static VertexSet full(std::size_t universe);
    static VertexSet of(std::size_t universe, std::span<const Vertex> members);

    std::size_t universe() const noexcept { return member_.size(); }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    bool contains(Vertex v) const { return v < member_.size() && member_[v] != 0; }
    void insert(Vertex v);
    void erase(Vertex v);

    /// Sorted member ids.
    std::vector<Vertex> members() const;

    /// |{u in vs : u in *this}|
    std::size_t count_in(std::span<const Vertex> vs) const;

    VertexSet operator|(const VertexSet& other) const;
    VertexSet operator&(const VertexSet& other) const;
    VertexSet complement() const;

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<std::uint8_t> member_;
    std::size_t count_ = 0;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Loops, repeated edges (in either
    /// orientation) and out-of-range endpoints throw InputError.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    /// Sorted neighbor list.
    std::span<const Vertex> neighbors(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

std::size_t degree(const Graph& g, Vertex v);
std::size_t min_degree(const Graph& g);
std::size_t max_degree(const Graph& g);

/// r if every vertex has degree r.
std::optional<std::size_t> regularity(const Graph& g);

bool is_connected(const Graph& g);

/// Connected components, each as a sorted vertex list, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Two-colouring of g, or nullopt when g has an odd cycle. Each component's
/// smallest vertex goes to the first part.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

/// BFS distances from `source`; unreachable vertices get kInfinite.
std::vector<std::size_t> distances_from(const Graph& g, Vertex source);

std::size_t diameter(const Graph& g);
std::size_t girth(const Graph& g);

/// N(u) ∩ N(v). Throws InputError when u == v.
VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v);

/// Subgraph induced by `keep`, re-indexed in increasing id order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

} // namespace ktdom
