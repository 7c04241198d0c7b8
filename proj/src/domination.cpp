#include "ktdom/domination.hpp"

#include "ktdom/aux_graphs.hpp"
#include "ktdom/errors.hpp"

#include <stdexcept>
#include <string>

namespace ktdom {

namespace {

std::size_t check_hypotheses(const Graph& g, std::size_t min_r, const char* who)
{
    if (g.order() == 0 || !is_connected(g))
        throw PreconditionError(std::string(who) + ": graph is not connected");
    auto r = regularity(g);
    if (!r)
        throw PreconditionError(std::string(who) + ": graph is not regular");
    if (*r < min_r)
        throw PreconditionError(std::string(who) + ": degree r=" + std::to_string(*r)
                                + " is below the required r>=" + std::to_string(min_r));
    return *r;
}

DominationCertificate from_coloring(const Graph& g, const Graph& aux, Variant variant,
                                    std::size_t k, std::size_t palette)
{
    auto col = brooks_coloring(aux);
    if (!is_proper(aux, col) || col.num_colors > palette)
        throw std::logic_error("Brooks colouring exceeded its palette");
    DominationCertificate cert;
    cert.set = set_from_coloring(g, col);
    cert.variant = variant;
    cert.k = k;
    cert.branch = Branch::generic_coloring;
    cert.colors_used = col.num_colors;
    cert.bound_numerator = palette - 1;
    cert.bound_denominator = palette;
    return cert;
}

void check_certificate(const Graph& g, const DominationCertificate& cert)
{
    if (!verify(g, cert.set, cert.k, cert.variant) || cert.size() > cert.bound_floor())
        throw std::logic_error("constructed set failed its own certificate");
}

} // namespace

std::string_view to_string(Variant v)
{
    return v == Variant::total ? "total" : "closed";
}

std::string_view to_string(Branch b)
{
    switch (b) {
    case Branch::generic_coloring: return "generic-coloring";
    case Branch::projective_plane_exact: return "projective-plane-exact";
    case Branch::moore_exact: return "moore-exact";
    }
    return "?";
}

std::optional<Variant> parse_variant(std::string_view text)
{
    if (text == "total")
        return Variant::total;
    if (text == "closed")
        return Variant::closed;
    return std::nullopt;
}

double DominationCertificate::bound_value() const
{
    return static_cast<double>(bound_numerator) * static_cast<double>(set.universe())
           / static_cast<double>(bound_denominator);
}

std::size_t DominationCertificate::bound_floor() const
{
    return bound_numerator * set.universe() / bound_denominator;
}

std::optional<Vertex> first_deficient_vertex(const Graph& g, const VertexSet& s, std::size_t k,
                                             Variant variant)
{
    if (k == 0)
        throw InputError("k must be at least 1");
    if (s.universe() != g.order())
        throw InputError("vertex set universe does not match graph order");
    for (Vertex v = 0; v < g.order(); ++v) {
        std::size_t covered = s.count_in(g.neighbors(v));
        if (variant == Variant::closed && s.contains(v))
            ++covered;
        if (covered < k)
            return v;
    }
    return std::nullopt;
}

bool verify(const Graph& g, const VertexSet& s, std::size_t k, Variant variant)
{
    return !first_deficient_vertex(g, s, k, variant).has_value();
}

bool verify_total(const Graph& g, const VertexSet& s, std::size_t k)
{
    return verify(g, s, k, Variant::total);
}

bool verify_closed(const Graph& g, const VertexSet& s, std::size_t k)
{
    return verify(g, s, k, Variant::closed);
}

VertexSet set_from_coloring(const Graph& g, const Coloring& col)
{
    if (col.assignment.size() != g.order())
        throw InputError("colouring does not cover the graph's vertex set");
    if (col.classes.empty())
        return VertexSet(g.order());
    std::size_t largest = 0;
    for (std::size_t c = 1; c < col.classes.size(); ++c)
        if (col.classes[c].size() > col.classes[largest].size())
            largest = c;
    return col.classes[largest].complement();
}

DominationCertificate total_dominating_r_minus_1(const Graph& g)
{
    const std::size_t r = check_hypotheses(g, 3, "total_dominating_r_minus_1");
    const std::size_t palette = r * (r - 1);
    Graph aux = common_neighbor_graph(g);

    auto parts = bipartition(g);
    auto plane_blocks = find_complete_components(aux, palette + 1);
    if (parts && plane_blocks.size() == 2 && g.order() == 2 * (palette + 1)) {
        // Incidence graph of a projective plane of order r-1: keep all but
        // the lowest vertex of each side.
        DominationCertificate cert;
        cert.set = VertexSet::full(g.order());
        cert.set.erase(parts->first.members().front());
        cert.set.erase(parts->second.members().front());
        cert.variant = Variant::total;
        cert.k = r - 1;
        cert.branch = Branch::projective_plane_exact;
        cert.colors_used = 0;
        cert.bound_numerator = palette;
        cert.bound_denominator = palette + 1;
        check_certificate(g, cert);
        return cert;
    }

    auto cert = from_coloring(g, aux, Variant::total, r - 1, palette);
    check_certificate(g, cert);
    return cert;
}

DominationCertificate dominating_r(const Graph& g)
{
    const std::size_t r = check_hypotheses(g, 2, "dominating_r");
    const std::size_t palette = r * r;
    Graph aux = closed_square_graph(g);

    if (g.order() == palette + 1 && !find_complete_components(aux, palette + 1).empty()) {
        DominationCertificate cert;
        cert.set = VertexSet::full(g.order());
        cert.set.erase(static_cast<Vertex>(g.order() - 1));
        cert.variant = Variant::closed;
        cert.k = r;
        cert.branch = Branch::moore_exact;
        cert.colors_used = 0;
        cert.bound_numerator = palette;
        cert.bound_denominator = palette + 1;
        check_certificate(g, cert);
        return cert;
    }

    auto cert = from_coloring(g, aux, Variant::closed, r, palette);
    check_certificate(g, cert);
    return cert;
}

} // namespace ktdom
