#include "ktdom/graph.hpp"

#include "ktdom/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace ktdom {

namespace {

void check_vertex(const Graph& g, Vertex v)
{
    if (v >= g.order())
        throw InputError("vertex " + std::to_string(v) + " out of range for graph of order "
                         + std::to_string(g.order()));
}

} // namespace

VertexSet VertexSet::full(std::size_t universe)
{
    VertexSet s(universe);
    std::fill(s.member_.begin(), s.member_.end(), 1);
    s.count_ = universe;
    return s;
}

VertexSet VertexSet::of(std::size_t universe, std::span<const Vertex> members)
{
    VertexSet s(universe);
    for (Vertex v : members)
        s.insert(v);
    return s;
}

void VertexSet::insert(Vertex v)
{
    if (v >= member_.size())
        throw InputError("vertex " + std::to_string(v) + " outside set universe of size "
                         + std::to_string(member_.size()));
    if (!member_[v]) {
        member_[v] = 1;
        ++count_;
    }
}

void VertexSet::erase(Vertex v)
{
    if (v < member_.size() && member_[v]) {
        member_[v] = 0;
        --count_;
    }
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    out.reserve(count_);
    for (Vertex v = 0; v < member_.size(); ++v)
        if (member_[v])
            out.push_back(v);
    return out;
}

std::size_t VertexSet::count_in(std::span<const Vertex> vs) const
{
    return static_cast<std::size_t>(
        std::count_if(vs.begin(), vs.end(), [this](Vertex v) { return contains(v); }));
}

VertexSet VertexSet::operator|(const VertexSet& other) const
{
    if (universe() != other.universe())
        throw InputError("vertex set universes differ");
    VertexSet out(universe());
    for (Vertex v = 0; v < universe(); ++v)
        if (member_[v] || other.member_[v])
            out.insert(v);
    return out;
}

VertexSet VertexSet::operator&(const VertexSet& other) const
{
    if (universe() != other.universe())
        throw InputError("vertex set universes differ");
    VertexSet out(universe());
    for (Vertex v = 0; v < universe(); ++v)
        if (member_[v] && other.member_[v])
            out.insert(v);
    return out;
}

VertexSet VertexSet::complement() const
{
    VertexSet out(universe());
    for (Vertex v = 0; v < universe(); ++v)
        if (!member_[v])
            out.insert(v);
    return out;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges)
{
    Graph g;
    g.adjacency_.resize(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v)
                             + ") has an endpoint outside 0.." + std::to_string(n) + "-1");
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u));
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& adj = g.adjacency_[v];
        std::sort(adj.begin(), adj.end());
        auto dup = std::adjacent_find(adj.begin(), adj.end());
        if (dup != adj.end())
            throw InputError("duplicate edge (" + std::to_string(v) + "," + std::to_string(*dup)
                             + ")");
    }
    g.edge_count_ = edges.size();
    return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const
{
    check_vertex(*this, v);
    return adjacency_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    check_vertex(*this, u);
    check_vertex(*this, v);
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::size_t degree(const Graph& g, Vertex v) { return g.neighbors(v).size(); }

std::size_t min_degree(const Graph& g)
{
    std::size_t d = g.order() == 0 ? 0 : kInfinite;
    for (Vertex v = 0; v < g.order(); ++v)
        d = std::min(d, degree(g, v));
    return d;
}

std::size_t max_degree(const Graph& g)
{
    std::size_t d = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        d = std::max(d, degree(g, v));
    return d;
}

std::optional<std::size_t> regularity(const Graph& g)
{
    if (g.order() == 0)
        return std::nullopt;
    const std::size_t r = degree(g, 0);
    for (Vertex v = 1; v < g.order(); ++v)
        if (degree(g, v) != r)
            return std::nullopt;
    return r;
}

std::vector<std::size_t> distances_from(const Graph& g, Vertex source)
{
    check_vertex(g, source);
    std::vector<std::size_t> dist(g.order(), kInfinite);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u))
            if (dist[w] == kInfinite) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

bool is_connected(const Graph& g)
{
    if (g.order() == 0)
        return true;
    auto dist = distances_from(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == kInfinite; });
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g)
{
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : g.neighbors(comp[i]))
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<int> side(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    VertexSet a(n), b(n);
    for (Vertex v = 0; v < n; ++v)
        (side[v] == 0 ? a : b).insert(v);
    return std::pair{std::move(a), std::move(b)};
}

std::size_t diameter(const Graph& g)
{
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        for (std::size_t d : distances_from(g, v)) {
            if (d == kInfinite)
                return kInfinite;
            best = std::max(best, d);
        }
    return best;
}

std::size_t girth(const Graph& g)
{
    // A BFS from every vertex sees the shortest cycle through that vertex as
    // the first non-tree edge closing back onto the BFS tree.
    std::size_t best = kInfinite;
    const std::size_t n = g.order();
    std::vector<std::size_t> dist(n);
    std::vector<Vertex> parent(n);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kInfinite);
        dist[s] = 0;
        parent[s] = s;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            if (2 * dist[u] + 1 >= best)
                break;
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == kInfinite) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v)
{
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v)
        throw InputError("common_neighbors needs two distinct vertices");
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    std::vector<Vertex> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return VertexSet::of(g.order(), both);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep)
{
    std::vector<Vertex> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    constexpr Vertex absent = std::numeric_limits<Vertex>::max();
    std::vector<Vertex> index(g.order(), absent);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        check_vertex(g, sorted[i]);
        index[sorted[i]] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (Vertex u : sorted)
        for (Vertex w : g.neighbors(u))
            if (u < w && index[w] != absent)
                edges.emplace_back(index[u], index[w]);
    return Graph::from_edges(sorted.size(), edges);
}

} // namespace ktdom
