#include "ktdom/generators.hpp"

#include "ktdom/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace ktdom {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    if (bound == 0)
        throw InputError("uniform_below needs a positive bound");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % bound + 1) % bound; // last accepted raw value
    std::uint64_t x;
    do {
        x = rng();
    } while (x > limit);
    return x % bound;
}

Graph random_regular(std::size_t n, std::size_t r, std::uint64_t seed)
{
    if (n < 3)
        throw InputError("random_regular needs n >= 3");
    if (r >= n)
        throw InputError("random_regular needs r < n (got r=" + std::to_string(r)
                         + ", n=" + std::to_string(n) + ")");
    if ((n * r) % 2 != 0)
        throw InputError("n*r must be even for an r-regular graph (n=" + std::to_string(n)
                         + ", r=" + std::to_string(r) + ")");

    std::mt19937_64 rng(seed);
    std::vector<Vertex> stubs(n * r);
    std::vector<Edge> edges(n * r / 2);
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n));

    for (std::size_t attempt = 0; attempt < kPairingRetryCap; ++attempt) {
        for (std::size_t i = 0; i < stubs.size(); ++i)
            stubs[i] = static_cast<Vertex>(i / r);

        // Forward Fisher-Yates, two positions per pair; stop drawing at the
        // first loop or repeated edge.
        std::size_t placed = 0;
        for (; placed < edges.size(); ++placed) {
            for (std::size_t pos = 2 * placed; pos < 2 * placed + 2; ++pos)
                std::swap(stubs[pos], stubs[pos + uniform_below(rng, stubs.size() - pos)]);
            Vertex u = stubs[2 * placed], v = stubs[2 * placed + 1];
            if (u == v || seen[u][v])
                break;
            seen[u][v] = seen[v][u] = true;
            edges[placed] = {std::min(u, v), std::max(u, v)};
        }
        for (std::size_t i = 0; i < placed; ++i)
            seen[edges[i].first][edges[i].second] = seen[edges[i].second][edges[i].first] = false;
        if (placed != edges.size())
            continue;
        Graph g = Graph::from_edges(n, edges);
        if (is_connected(g))
            return g;
    }
    throw GenerationError("no simple connected " + std::to_string(r) + "-regular graph on "
                          + std::to_string(n) + " vertices after "
                          + std::to_string(kPairingRetryCap) + " pairings");
}

Graph random_gnp(std::size_t n, double p, std::uint64_t seed)
{
    if (p < 0.0 || p > 1.0)
        throw InputError("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    // 53-bit uniform in [0, 1)
    auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (unit() < p)
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

} // namespace ktdom
