#include "ktdom/atlas.hpp"

#include "ktdom/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <string>
#include <vector>

namespace ktdom::atlas {

namespace {

// Arithmetic in GF(p^e) for the few orders we support. Elements are
// polynomials over GF(p) packed as base-p integers; tables are built once.
class FiniteField {
public:
    explicit FiniteField(std::size_t q)
    {
        // q -> (p, e, modulus coefficients c_0..c_{e-1} of x^e = -Σ c_i x^i)
        struct Spec {
            std::size_t q, p, e;
            std::array<std::size_t, 3> low; // x^e + low[e-1] x^{e-1} + ... + low[0]
        };
        static constexpr std::array<Spec, 7> specs{{
            {2, 2, 1, {0, 0, 0}},
            {3, 3, 1, {0, 0, 0}},
            {4, 2, 2, {1, 1, 0}}, // x^2 + x + 1
            {5, 5, 1, {0, 0, 0}},
            {7, 7, 1, {0, 0, 0}},
            {8, 2, 3, {1, 1, 0}}, // x^3 + x + 1
            {9, 3, 2, {1, 0, 0}}, // x^2 + 1
        }};
        auto it = std::find_if(specs.begin(), specs.end(), [q](const Spec& s) { return s.q == q; });
        if (it == specs.end()) {
            std::string msg = "projective plane order " + std::to_string(q)
                              + " unsupported; supported orders are 2, 3, 4, 5, 7, 8, 9";
            if (q == 6)
                msg += " (no projective plane of order 6 exists)";
            throw InputError(msg);
        }
        q_ = q;
        p_ = it->p;
        e_ = it->e;
        add_.assign(q * q, 0);
        mul_.assign(q * q, 0);
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t b = 0; b < q; ++b) {
                add_[a * q + b] = pack(add_digits(unpack(a), unpack(b)));
                mul_[a * q + b] = pack(mul_digits(unpack(a), unpack(b), it->low));
            }
    }

    std::size_t order() const { return q_; }
    std::size_t add(std::size_t a, std::size_t b) const { return add_[a * q_ + b]; }
    std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * q_ + b]; }

private:
    std::vector<std::size_t> unpack(std::size_t a) const
    {
        std::vector<std::size_t> d(e_);
        for (std::size_t i = 0; i < e_; ++i, a /= p_)
            d[i] = a % p_;
        return d;
    }

    std::size_t pack(const std::vector<std::size_t>& d) const
    {
        std::size_t a = 0;
        for (std::size_t i = e_; i-- > 0;)
            a = a * p_ + d[i];
        return a;
    }

    std::vector<std::size_t> add_digits(std::vector<std::size_t> a,
                                        const std::vector<std::size_t>& b) const
    {
        for (std::size_t i = 0; i < e_; ++i)
            a[i] = (a[i] + b[i]) % p_;
        return a;
    }

    std::vector<std::size_t> mul_digits(const std::vector<std::size_t>& a,
                                        const std::vector<std::size_t>& b,
                                        const std::array<std::size_t, 3>& low) const
    {
        std::vector<std::size_t> prod(2 * e_ - 1, 0);
        for (std::size_t i = 0; i < e_; ++i)
            for (std::size_t j = 0; j < e_; ++j)
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
        // reduce with x^e = -(low[0] + low[1] x + ...)
        for (std::size_t deg = prod.size(); deg-- > e_;) {
            const std::size_t c = prod[deg];
            prod[deg] = 0;
            for (std::size_t i = 0; i < e_; ++i)
                prod[deg - e_ + i] = (prod[deg - e_ + i] + (p_ - low[i]) * c) % p_;
        }
        prod.resize(e_);
        return prod;
    }

    std::size_t q_ = 0, p_ = 0, e_ = 0;
    std::vector<std::size_t> add_, mul_;
};

using Triple = std::array<std::size_t, 3>;

// Representatives of the one-dimensional subspaces of GF(q)^3: first
// non-zero coordinate equal to 1.
std::vector<Triple> normalized_vectors(std::size_t q)
{
    std::vector<Triple> out;
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b)
            out.push_back({1, a, b});
    for (std::size_t b = 0; b < q; ++b)
        out.push_back({0, 1, b});
    out.push_back({0, 0, 1});
    return out;
}

std::size_t parse_count(std::string_view text, std::string_view spec)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw InputError("bad number '" + std::string(text) + "' in graph spec '"
                         + std::string(spec) + "'");
    return value;
}

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw InputError(what);
}

} // namespace

Graph heawood()
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 14; ++i) {
        edges.emplace_back(i, (i + 1) % 14);
        if (i % 2 == 0)
            edges.emplace_back(i, (i + 5) % 14);
    }
    return Graph::from_edges(14, edges);
}

Graph projective_plane_incidence(std::size_t q)
{
    const FiniteField field(q);
    const auto vecs = normalized_vectors(q);
    const std::size_t m = vecs.size(); // q² + q + 1
    std::vector<Edge> edges;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t l = 0; l < m; ++l) {
            std::size_t dot = 0;
            for (std::size_t i = 0; i < 3; ++i)
                dot = field.add(dot, field.mul(vecs[p][i], vecs[l][i]));
            if (dot == 0)
                edges.emplace_back(static_cast<Vertex>(p), static_cast<Vertex>(m + l));
        }
    return Graph::from_edges(2 * m, edges);
}

std::size_t moore_order(std::size_t r, std::size_t d)
{
    require(r >= 2 && d >= 1, "moore_order needs r >= 2 and d >= 1");
    std::size_t sum = 0, term = 1;
    for (std::size_t i = 0; i < d; ++i, term *= (r - 1))
        sum += term;
    return 1 + r * sum;
}

Graph moore_graph(std::size_t r)
{
    switch (r) {
    case 2: return cycle(5);
    case 3: return petersen();
    case 7: {
        // Pentagons P_h (vertices 5h+j) and pentagrams Q_i (25+5i+j);
        // vertex j of P_h joins vertex h·i+j of Q_i.
        std::vector<Edge> edges;
        auto p = [](std::size_t h, std::size_t j) { return static_cast<Vertex>(5 * h + j % 5); };
        auto qv = [](std::size_t i, std::size_t j) {
            return static_cast<Vertex>(25 + 5 * i + j % 5);
        };
        for (std::size_t h = 0; h < 5; ++h)
            for (std::size_t j = 0; j < 5; ++j) {
                edges.emplace_back(p(h, j), p(h, j + 1));
                edges.emplace_back(qv(h, j), qv(h, j + 2));
                for (std::size_t i = 0; i < 5; ++i)
                    edges.emplace_back(p(h, j), qv(i, h * i + j));
            }
        Graph g = Graph::from_edges(50, edges);
        if (regularity(g) != std::optional<std::size_t>{7} || diameter(g) != 2 || girth(g) != 5)
            throw std::logic_error("Hoffman-Singleton construction failed its Moore checks");
        return g;
    }
    case 57:
        throw InputError("existence of a Moore graph of degree 57 and diameter 2 is unknown");
    default:
        throw InputError("no Moore graph of diameter 2 exists for degree " + std::to_string(r)
                         + "; supported degrees are 2, 3, 7");
    }
}

Graph path(std::size_t n)
{
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle(std::size_t n)
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph::from_edges(n, edges);
}

Graph complete(std::size_t n)
{
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b)
{
    require(a >= 1 && b >= 1, "complete bipartite graph needs both sides >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j)
            edges.emplace_back(i, static_cast<Vertex>(a + j));
    return Graph::from_edges(a + b, edges);
}

Graph hypercube(std::size_t d)
{
    require(d >= 1 && d <= 20, "hypercube needs 1 <= d <= 20");
    const std::size_t n = std::size_t{1} << d;
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t bit = 0; bit < d; ++bit) {
            Vertex w = v ^ (Vertex{1} << bit);
            if (v < w)
                edges.emplace_back(v, w);
        }
    return Graph::from_edges(n, edges);
}

Graph prism(std::size_t n)
{
    require(n >= 3, "prism needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        const auto next = static_cast<Vertex>((i + 1) % n);
        edges.emplace_back(i, next);
        edges.emplace_back(static_cast<Vertex>(n + i), static_cast<Vertex>(n + next));
        edges.emplace_back(i, static_cast<Vertex>(n + i));
    }
    return Graph::from_edges(2 * n, edges);
}

Graph petersen()
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);             // outer cycle
        edges.emplace_back(i, i + 5);                   // spokes
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);     // inner pentagram
    }
    return Graph::from_edges(10, edges);
}

Graph named(std::string_view spec)
{
    const auto colon = spec.find(':');
    const std::string_view name = spec.substr(0, colon);
    const std::string_view args = colon == std::string_view::npos ? "" : spec.substr(colon + 1);
    auto one = [&] {
        require(!args.empty(), "graph spec '" + std::string(spec) + "' needs an argument");
        return parse_count(args, spec);
    };

    if (name == "heawood")
        return heawood();
    if (name == "petersen")
        return petersen();
    if (name == "pg2")
        return projective_plane_incidence(one());
    if (name == "moore")
        return moore_graph(one());
    if (name == "cycle")
        return cycle(one());
    if (name == "path")
        return path(one());
    if (name == "complete")
        return complete(one());
    if (name == "hypercube")
        return hypercube(one());
    if (name == "prism")
        return prism(one());
    if (name == "kbip") {
        const auto comma = args.find(',');
        require(comma != std::string_view::npos, "kbip spec needs two sizes: kbip:<a>,<b>");
        return complete_bipartite(parse_count(args.substr(0, comma), spec),
                                  parse_count(args.substr(comma + 1), spec));
    }
    throw InputError("unknown graph name '" + std::string(name) + "'");
}

} // namespace ktdom::atlas
