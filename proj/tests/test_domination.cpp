#include "ktdom/atlas.hpp"
#include "ktdom/domination.hpp"
#include "ktdom/errors.hpp"
#include "ktdom/exact.hpp"
#include "ktdom/generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace ktdom;

namespace {

// All k-subsets of 0..n-1 in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& visit)
{
    std::vector<Vertex> pick(k);
    for (std::size_t i = 0; i < k; ++i)
        pick[i] = static_cast<Vertex>(i);
    while (true) {
        visit(pick);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

} // namespace

TEST_CASE("verify_total")
{
    auto hw = atlas::heawood();
    CHECK(verify_total(hw, VertexSet::full(14), 2));

    std::size_t passing = 0;
    for_each_subset(14, 11, [&](const std::vector<Vertex>& s) {
        passing += verify_total(hw, VertexSet::of(14, s), 2) ? 1 : 0;
    });
    CHECK(passing == 0);

    auto k4 = atlas::complete(4);
    for_each_subset(4, 3, [&](const std::vector<Vertex>& s) {
        CHECK(verify_total(k4, VertexSet::of(4, s), 2));
    });
    CHECK_THROWS_AS(verify_total(k4, VertexSet::full(4), 0), InputError);
}

TEST_CASE("verify_closed")
{
    auto c5 = atlas::cycle(5);
    for_each_subset(5, 4, [&](const std::vector<Vertex>& s) {
        CHECK(verify_closed(c5, VertexSet::of(5, s), 2));
    });
    for_each_subset(5, 3, [&](const std::vector<Vertex>& s) {
        CHECK_FALSE(verify_closed(c5, VertexSet::of(5, s), 2));
    });
    for (const auto& g : {atlas::petersen(), atlas::path(3), atlas::complete(6)})
        CHECK(verify_closed(g, VertexSet::full(g.order()), 1));
}

TEST_CASE("first deficient vertex")
{
    auto c5 = atlas::cycle(5);
    auto s = VertexSet::of(5, std::vector<Vertex>{0, 1, 2});
    auto bad = first_deficient_vertex(c5, s, 2, Variant::closed);
    REQUIRE(bad);
    CHECK(*bad == 3);
}

TEST_CASE("set from colouring drops the largest class")
{
    // classes {0,1,2}, {3,4}, {5,6}
    auto col = Coloring::from_assignment({0, 0, 0, 1, 1, 2, 2});
    auto empty7 = Graph::from_edges(7, {});
    CHECK(set_from_coloring(empty7, col).size() == 4);

    auto tie = Coloring::from_assignment({1, 0, 1, 0});
    auto s = set_from_coloring(Graph::from_edges(4, {}), tie);
    CHECK(s.members() == std::vector<Vertex>{0, 2});

    auto single = Coloring::from_assignment({0, 0, 0});
    CHECK(set_from_coloring(Graph::from_edges(3, {}), single).empty());
}

TEST_CASE("total (r-1)-tuple construction")
{
    auto hw = total_dominating_r_minus_1(atlas::heawood());
    CHECK(hw.branch == Branch::projective_plane_exact);
    CHECK(hw.size() == 12);
    CHECK(hw.k == 2);
    CHECK(hw.colors_used == 0);

    auto k4 = atlas::complete(4);
    auto cert = total_dominating_r_minus_1(k4);
    CHECK(cert.branch == Branch::generic_coloring);
    CHECK(cert.size() <= 3);
    CHECK(verify_total(k4, cert.set, 2));
    CHECK(oracle::exhaustive_gamma(k4, 2, false) == std::optional<std::size_t>{3});

    auto pg3 = total_dominating_r_minus_1(atlas::projective_plane_incidence(3));
    CHECK(pg3.branch == Branch::projective_plane_exact);
    CHECK(pg3.size() == 24);
}

TEST_CASE("closed r-tuple construction")
{
    auto pet = dominating_r(atlas::petersen());
    CHECK(pet.branch == Branch::moore_exact);
    CHECK(pet.size() == 9);

    auto c5 = dominating_r(atlas::cycle(5));
    CHECK(c5.branch == Branch::moore_exact);
    CHECK(c5.size() == 4);

    auto q3 = atlas::hypercube(3);
    auto cert = dominating_r(q3);
    CHECK(cert.branch == Branch::generic_coloring);
    CHECK(cert.size() <= 7);
    CHECK(verify_closed(q3, cert.set, 3));
    CHECK(cert.size() >= *oracle::exhaustive_gamma(q3, 3, true));
}

TEST_CASE("constructors reject graphs outside their hypotheses")
{
    const std::vector<Edge> two_k4 = [] {
        std::vector<Edge> e;
        for (Vertex base : {0u, 4u})
            for (Vertex i = 0; i < 4; ++i)
                for (Vertex j = i + 1; j < 4; ++j)
                    e.emplace_back(base + i, base + j);
        return e;
    }();
    auto disconnected = Graph::from_edges(8, two_k4);
    CHECK_THROWS_AS(total_dominating_r_minus_1(disconnected), PreconditionError);
    CHECK_THROWS_AS(dominating_r(disconnected), PreconditionError);
    CHECK_THROWS_AS(total_dominating_r_minus_1(atlas::path(4)), PreconditionError);
    CHECK_THROWS_AS(dominating_r(atlas::path(4)), PreconditionError);
    CHECK_THROWS_AS(total_dominating_r_minus_1(atlas::cycle(6)), PreconditionError);
    CHECK_NOTHROW(dominating_r(atlas::cycle(6)));
    CHECK_THROWS_WITH(total_dominating_r_minus_1(atlas::path(4)),
                      doctest::Contains("not regular"));
}

TEST_CASE("certificate invariants over random regular graphs")
{
    for (std::size_t r : {3, 4, 5}) {
        for (std::uint64_t seed = 100; seed < 115; ++seed) {
            const std::size_t n = 2 * (r + 2 + seed % 9);
            auto g = random_regular(n, r, seed);
            for (const auto& cert : {total_dominating_r_minus_1(g), dominating_r(g)}) {
                CHECK(verify(g, cert.set, cert.k, cert.variant));
                CHECK(cert.size() <= cert.bound_floor());
                if (cert.branch == Branch::generic_coloring) {
                    const std::size_t palette =
                        cert.variant == Variant::total ? r * (r - 1) : r * r;
                    CHECK(cert.colors_used <= palette);
                    CHECK(cert.size() * cert.colors_used <= (cert.colors_used - 1) * n);
                }
            }
        }
    }
}

TEST_CASE("projective-plane lower-bound argument on Heawood")
{
    auto g = atlas::heawood();
    auto parts = *bipartition(g);
    for (const auto& side : {parts.first.members(), parts.second.members()})
        for (std::size_t i = 0; i < side.size(); ++i)
            for (std::size_t j = i + 1; j < side.size(); ++j) {
                auto s = VertexSet::full(14);
                s.erase(side[i]);
                s.erase(side[j]);
                CHECK_FALSE(verify_total(g, s, 2));
            }
}

TEST_CASE("Moore lower-bound argument is exhaustive on C5 and Petersen")
{
    for (const auto& g : {atlas::cycle(5), atlas::petersen()}) {
        const std::size_t n = g.order();
        const std::size_t r = *regularity(g);
        for_each_subset(n, n - 2, [&](const std::vector<Vertex>& s) {
            CHECK_FALSE(verify_closed(g, VertexSet::of(n, s), r));
        });
    }
}
