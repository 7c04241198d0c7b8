#include "ktdom/atlas.hpp"
#include "ktdom/aux_graphs.hpp"
#include "ktdom/coloring.hpp"
#include "ktdom/errors.hpp"
#include "ktdom/generators.hpp"

#include <doctest.h>

#include <numeric>

using namespace ktdom;

namespace {

std::vector<Vertex> identity(std::size_t n)
{
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    return order;
}

// Colours used on one component.
std::size_t colors_on(const Coloring& col, const std::vector<Vertex>& comp)
{
    std::vector<Color> seen;
    for (Vertex v : comp)
        seen.push_back(col.assignment[v]);
    std::sort(seen.begin(), seen.end());
    return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

bool is_odd_cycle(const Graph& h)
{
    return h.order() % 2 == 1 && h.order() >= 3 && regularity(h) == std::optional<std::size_t>{2};
}

void check_brooks(const Graph& g)
{
    auto col = brooks_coloring(g);
    REQUIRE(is_proper(g, col));
    std::size_t classes_total = 0;
    for (const auto& cls : col.classes) {
        CHECK_FALSE(cls.empty());
        classes_total += cls.size();
    }
    CHECK(classes_total == g.order());
    for (const auto& comp : connected_components(g)) {
        auto h = induced_subgraph(g, comp);
        const std::size_t used = colors_on(col, comp);
        if (regularity(h) == std::optional<std::size_t>{h.order() - 1})
            CHECK(used == h.order());
        else if (is_odd_cycle(h))
            CHECK(used == 3);
        else
            CHECK(used <= std::max<std::size_t>(max_degree(h), 1));
    }
}

} // namespace

TEST_CASE("greedy colouring")
{
    CHECK(greedy_coloring(atlas::complete(4), identity(4)).num_colors == 4);
    auto c4 = greedy_coloring(atlas::cycle(4), identity(4));
    CHECK(c4.num_colors == 2);
    CHECK(is_proper(atlas::cycle(4), c4));
    CHECK(greedy_coloring(Graph::from_edges(5, {}), identity(5)).num_colors == 1);

    const std::vector<Vertex> repeated{0, 0, 1, 2};
    const std::vector<Vertex> short_order{0, 1};
    CHECK_THROWS_AS(greedy_coloring(atlas::complete(4), repeated), InputError);
    CHECK_THROWS_AS(greedy_coloring(atlas::complete(4), short_order), InputError);
}

TEST_CASE("Brooks colouring on named graphs")
{
    auto pet = brooks_coloring(atlas::petersen());
    CHECK(is_proper(atlas::petersen(), pet));
    CHECK(pet.num_colors <= 3);
    CHECK(brooks_coloring(atlas::complete(7)).num_colors == 7);
    CHECK(brooks_coloring(atlas::cycle(5)).num_colors == 3);
    CHECK(brooks_coloring(atlas::cycle(6)).num_colors == 2);

    for (const auto& g : {atlas::hypercube(3), atlas::complete_bipartite(3, 3), atlas::prism(5),
                          atlas::heawood(), atlas::moore_graph(7), atlas::path(6)})
        check_brooks(g);

    // two triangles sharing vertex 2
    std::vector<Edge> bowtie{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}};
    check_brooks(Graph::from_edges(5, bowtie));
}

TEST_CASE("Brooks handles regular graphs with a cut vertex")
{
    // Two copies of K5 minus an edge joined through a new cut structure:
    // each block hangs off vertex 0; every vertex has degree 4.
    std::vector<Edge> edges;
    auto block = [&](Vertex base) {
        // vertices base..base+4 form K5 minus edge (base, base+1); both
        // endpoints instead join the shared hub 0.
        for (Vertex i = 0; i < 5; ++i)
            for (Vertex j = i + 1; j < 5; ++j)
                if (!(i == 0 && j == 1))
                    edges.emplace_back(base + i, base + j);
        edges.emplace_back(0, base);
        edges.emplace_back(0, base + 1);
    };
    block(1);
    block(6);
    auto g = Graph::from_edges(11, edges);
    REQUIRE(regularity(g) == std::optional<std::size_t>{4});
    auto col = brooks_coloring(g);
    CHECK(is_proper(g, col));
    CHECK(col.num_colors <= 4);
}

TEST_CASE("complete components")
{
    auto hw_aux = common_neighbor_graph(atlas::heawood());
    CHECK(find_complete_components(hw_aux, 7).size() == 2);
    auto pet_sq = closed_square_graph(atlas::petersen());
    auto found = find_complete_components(pet_sq, 10);
    REQUIRE(found.size() == 1);
    CHECK(found.front().size() == 10);
    CHECK(find_complete_components(atlas::cycle(6), 3).empty());
    CHECK_THROWS_AS(find_complete_components(atlas::cycle(6), 0), InputError);
}

TEST_CASE("Brooks property sweep with greedy cross-check")
{
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const std::size_t n = 5 + seed % 35;
        const double p = 0.05 + 0.02 * static_cast<double>(seed % 15);
        auto g = random_gnp(n, p, seed);
        check_brooks(g);
        auto greedy = greedy_coloring(g, identity(n));
        CHECK(greedy.num_colors <= max_degree(g) + 1);
    }
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = random_regular(20 + 2 * (seed % 10), 3 + seed % 3, seed);
        check_brooks(g);
        check_brooks(common_neighbor_graph(g));
        check_brooks(closed_square_graph(g));
    }
}

TEST_CASE("Brooks colouring is deterministic")
{
    auto g = random_regular(30, 4, 9);
    CHECK(brooks_coloring(g).assignment == brooks_coloring(g).assignment);
}
