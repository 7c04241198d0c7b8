#pragma once

#include "ktdom/coloring.hpp"
#include "ktdom/graph.hpp"

#include <optional>
#include <string_view>

namespace ktdom {

/// total: count open neighbourhoods N(v); closed: count N[v] = N(v) ∪ {v}.
enum class Variant { total, closed };

/// Which case of the construction produced a certificate.
enum class Branch { generic_coloring, projective_plane_exact, moore_exact };

std::string_view to_string(Variant v);
std::string_view to_string(Branch b);
std::optional<Variant> parse_variant(std::string_view text);

struct DominationCertificate {
    VertexSet set;
    Variant variant = Variant::total;
    std::size_t k = 0;
    Branch branch = Branch::generic_coloring;
    std::size_t colors_used = 0; // 0 for the exact branches
    // Guaranteed size is at most bound_numerator / bound_denominator * n.
    std::size_t bound_numerator = 0;
    std::size_t bound_denominator = 1;

    std::size_t size() const noexcept { return set.size(); }
    double bound_value() const;
    /// ⌊bound_numerator · n / bound_denominator⌋, the integer the size must not exceed.
    std::size_t bound_floor() const;
};

/// First vertex with fewer than k (open or closed) neighbours in s.
std::optional<Vertex> first_deficient_vertex(const Graph& g, const VertexSet& s, std::size_t k,
                                             Variant variant);

bool verify_total(const Graph& g, const VertexSet& s, std::size_t k);
bool verify_closed(const Graph& g, const VertexSet& s, std::size_t k);
bool verify(const Graph& g, const VertexSet& s, std::size_t k, Variant variant);

/// V minus the largest colour class (lowest colour index on ties).
VertexSet set_from_coloring(const Graph& g, const Coloring& col);

/// (r-1)-tuple total dominating set of a connected r-regular graph, r >= 3.
/// Projective-plane incidence graphs get the optimal 2r(r-1) set; all other
/// graphs get V minus the largest class of a Brooks colouring of G'.
DominationCertificate total_dominating_r_minus_1(const Graph& g);

/// r-tuple dominating set of a connected r-regular graph, r >= 2. Moore
/// graphs of diameter two get n-1 vertices; otherwise V minus the largest
/// class of a Brooks colouring of G''.
DominationCertificate dominating_r(const Graph& g);

} // namespace ktdom
