#include "ktdom/coloring.hpp"

#include "ktdom/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace ktdom {

namespace {

constexpr Color kUncolored = std::numeric_limits<Color>::max();

// Smallest colour not used by an already-coloured neighbour of v.
Color first_free(const Graph& h, Vertex v, const std::vector<Color>& assignment)
{
    std::vector<bool> used(h.neighbors(v).size() + 1, false);
    for (Vertex w : h.neighbors(v)) {
        Color c = assignment[w];
        if (c != kUncolored && c < used.size())
            used[c] = true;
    }
    Color c = 0;
    while (used[c])
        ++c;
    return c;
}

void greedy_extend(const Graph& h, std::span<const Vertex> order, std::vector<Color>& assignment)
{
    for (Vertex v : order)
        assignment[v] = first_free(h, v, assignment);
}

// BFS order from `root`, skipping vertices flagged in `removed`.
std::vector<Vertex> bfs_order(const Graph& h, Vertex root, const std::vector<bool>& removed)
{
    std::vector<bool> seen(removed);
    std::vector<Vertex> order{root};
    seen[root] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex w : h.neighbors(order[i]))
            if (!seen[w]) {
                seen[w] = true;
                order.push_back(w);
            }
    return order;
}

// Reverse BFS order from root: every vertex except the root is coloured
// while its BFS parent is still uncoloured.
std::vector<Color> color_from_root(const Graph& h, Vertex root)
{
    auto order = bfs_order(h, root, std::vector<bool>(h.order(), false));
    std::reverse(order.begin(), order.end());
    std::vector<Color> assignment(h.order(), kUncolored);
    greedy_extend(h, order, assignment);
    return assignment;
}

bool connected_without(const Graph& h, const std::vector<bool>& removed)
{
    Vertex start = 0;
    while (start < h.order() && removed[start])
        ++start;
    if (start == h.order())
        return true;
    auto reached = bfs_order(h, start, removed);
    auto remaining = static_cast<std::size_t>(std::count(removed.begin(), removed.end(), false));
    return reached.size() == remaining;
}

// h is connected, Δ-regular with Δ >= 3, not complete.
std::vector<Color> color_regular(const Graph& h)
{
    const std::size_t n = h.order();
    std::vector<bool> removed(n, false);

    for (Vertex cut = 0; cut < n; ++cut) {
        removed[cut] = true;
        const bool still_connected = connected_without(h, removed);
        removed[cut] = false;
        if (still_connected)
            continue;

        // Split at the cut vertex. Inside each piece plus the cut vertex, the
        // cut vertex has degree below Δ, so rooting there needs only Δ colours.
        std::vector<Color> assignment(n, kUncolored);
        removed[cut] = true;
        std::vector<bool> placed(n, false);
        for (Vertex s = 0; s < n; ++s) {
            if (s == cut || placed[s])
                continue;
            auto piece = bfs_order(h, s, removed);
            for (Vertex v : piece)
                placed[v] = true;
            piece.push_back(cut);
            std::sort(piece.begin(), piece.end());
            Graph sub = induced_subgraph(h, piece);
            auto local_cut = static_cast<Vertex>(
                std::lower_bound(piece.begin(), piece.end(), cut) - piece.begin());
            auto local = color_from_root(sub, local_cut);
            const Color pivot = local[local_cut];
            for (std::size_t i = 0; i < piece.size(); ++i) {
                Color c = local[i];
                if (c == pivot)
                    c = 0;
                else if (c == 0)
                    c = pivot;
                if (piece[i] != cut)
                    assignment[piece[i]] = c;
            }
        }
        assignment[cut] = 0;
        return assignment;
    }

    // 2-connected: find v with non-adjacent neighbours x, y such that
    // h - {x, y} stays connected. Give x and y the same colour, then colour
    // the rest towards v; v sees a repeated colour and so has one to spare.
    for (Vertex v = 0; v < n; ++v) {
        auto nbrs = h.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                const Vertex x = nbrs[i], y = nbrs[j];
                if (h.adjacent(x, y))
                    continue;
                removed[x] = removed[y] = true;
                if (!connected_without(h, removed)) {
                    removed[x] = removed[y] = false;
                    continue;
                }
                auto order = bfs_order(h, v, removed);
                std::reverse(order.begin(), order.end());
                std::vector<Color> assignment(n, kUncolored);
                assignment[x] = assignment[y] = 0;
                greedy_extend(h, order, assignment);
                return assignment;
            }
    }
    throw std::logic_error("no Brooks triple in a 2-connected non-complete regular graph");
}

// h is connected.
std::vector<Color> color_component(const Graph& h)
{
    const std::size_t n = h.order();
    const std::size_t delta = max_degree(h);
    const auto r = regularity(h);

    if (r && *r == n - 1) {
        std::vector<Color> assignment(n);
        for (Vertex v = 0; v < n; ++v)
            assignment[v] = v;
        return assignment;
    }
    if (!r) {
        Vertex root = 0;
        while (degree(h, root) == delta)
            ++root;
        return color_from_root(h, root);
    }
    if (delta == 2) {
        if (auto parts = bipartition(h)) {
            std::vector<Color> assignment(n);
            for (Vertex v = 0; v < n; ++v)
                assignment[v] = parts->first.contains(v) ? 0 : 1;
            return assignment;
        }
        // odd cycle
        return color_from_root(h, 0);
    }
    return color_regular(h);
}

} // namespace

Coloring Coloring::from_assignment(std::vector<Color> assignment)
{
    std::vector<Color> used(assignment.begin(), assignment.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());

    Coloring col;
    col.num_colors = used.size();
    col.classes.assign(used.size(), VertexSet(assignment.size()));
    for (Vertex v = 0; v < assignment.size(); ++v) {
        auto packed = static_cast<Color>(
            std::lower_bound(used.begin(), used.end(), assignment[v]) - used.begin());
        assignment[v] = packed;
        col.classes[packed].insert(v);
    }
    col.assignment = std::move(assignment);
    return col;
}

bool is_proper(const Graph& g, const Coloring& col)
{
    if (col.assignment.size() != g.order())
        return false;
    for (auto [u, v] : g.edges())
        if (col.assignment[u] == col.assignment[v])
            return false;
    return true;
}

Coloring greedy_coloring(const Graph& g, std::span<const Vertex> order)
{
    std::vector<bool> seen(g.order(), false);
    if (order.size() != g.order())
        throw InputError("colouring order must list every vertex exactly once");
    for (Vertex v : order) {
        if (v >= g.order() || seen[v])
            throw InputError("colouring order is not a permutation (vertex "
                             + std::to_string(v) + ")");
        seen[v] = true;
    }
    std::vector<Color> assignment(g.order(), kUncolored);
    greedy_extend(g, order, assignment);
    return Coloring::from_assignment(std::move(assignment));
}

Coloring brooks_coloring(const Graph& g)
{
    std::vector<Color> assignment(g.order(), 0);
    for (const auto& comp : connected_components(g)) {
        Graph h = induced_subgraph(g, comp);
        auto local = color_component(h);
        for (std::size_t i = 0; i < comp.size(); ++i)
            assignment[comp[i]] = local[i];
    }
    return Coloring::from_assignment(std::move(assignment));
}

std::vector<VertexSet> find_complete_components(const Graph& g, std::size_t size)
{
    if (size == 0)
        throw InputError("complete component size must be at least 1");
    std::vector<VertexSet> out;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() != size)
            continue;
        bool complete = std::all_of(comp.begin(), comp.end(),
                                    [&](Vertex v) { return degree(g, v) == size - 1; });
        if (complete)
            out.push_back(VertexSet::of(g.order(), comp));
    }
    return out;
}

} // namespace ktdom
