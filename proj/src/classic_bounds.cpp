#include "ktdom/classic_bounds.hpp"

#include <cmath>

namespace ktdom {

namespace {

double binomial(std::size_t n, std::size_t m)
{
    if (m > n)
        return 0.0;
    double out = 1.0;
    for (std::size_t i = 1; i <= m; ++i)
        out = out * static_cast<double>(n - m + i) / static_cast<double>(i);
    return out;
}

std::vector<std::size_t> degrees_of(const Graph& g)
{
    std::vector<std::size_t> out(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        out[v] = degree(g, v);
    return out;
}

double average_binomial(std::span<const std::size_t> degrees, std::size_t shift, std::size_t m)
{
    if (degrees.empty())
        return 0.0;
    double sum = 0.0;
    for (std::size_t d : degrees)
        sum += binomial(d + shift, m);
    return sum / static_cast<double>(degrees.size());
}

} // namespace

Bound Bound::of(double v, std::size_t n)
{
    Bound b;
    b.value = v;
    b.vacuous = v > static_cast<double>(n);
    return b;
}

Bound Bound::inapplicable(std::string reason)
{
    Bound b;
    b.inapplicable_reason = std::move(reason);
    return b;
}

double d_tilde(std::span<const std::size_t> degrees, std::size_t m)
{
    return average_binomial(degrees, 1, m);
}

double d_tilde(const Graph& g, std::size_t m) { return d_tilde(degrees_of(g), m); }

double d_hat(std::span<const std::size_t> degrees, std::size_t m)
{
    return average_binomial(degrees, 0, m);
}

double d_hat(const Graph& g, std::size_t m) { return d_hat(degrees_of(g), m); }

Bound probabilistic_closed_bound(const Graph& g, std::size_t k)
{
    const std::size_t delta = min_degree(g);
    if (g.order() == 0)
        return Bound::inapplicable("empty graph");
    if (k < 1 || k > delta + 1)
        return Bound::inapplicable("needs 1 <= k <= delta+1");
    const double span = static_cast<double>(delta - k + 2);
    const double value = (std::log(span) + std::log(d_tilde(g, k - 1)) + 1.0) / span
                         * static_cast<double>(g.order());
    return Bound::of(value, g.order());
}

Bound probabilistic_total_bound(const Graph& g, std::size_t k)
{
    const std::size_t delta = min_degree(g);
    if (g.order() == 0)
        return Bound::inapplicable("empty graph");
    if (k < 1 || delta <= k)
        return Bound::inapplicable("needs delta > k >= 1");
    const double span = static_cast<double>(delta - k);
    const double value = (std::log(span) + std::log(d_hat(g, k)) + 1.0) / span
                         * static_cast<double>(g.order());
    return Bound::of(value, g.order());
}

RegularBounds regular_bounds(std::size_t r, std::size_t n)
{
    RegularBounds out;
    const double nn = static_cast<double>(n);
    if (r >= 3) {
        const double c = static_cast<double>(r * (r - 1));
        out.total = Bound::of((c - 1.0) / c * nn, n);
    } else {
        out.total = Bound::inapplicable("needs r >= 3");
    }
    if (r >= 2) {
        const double c = static_cast<double>(r * r);
        out.closed = Bound::of((c - 1.0) / c * nn, n);
    } else {
        out.closed = Bound::inapplicable("needs r >= 2");
    }
    return out;
}

BoundReport compare_report(const Graph& g)
{
    BoundReport rep;
    rep.n = g.order();
    rep.r = regularity(g);
    const std::size_t delta = min_degree(g);
    const std::size_t base = rep.r ? *rep.r : delta;

    if (base >= 1) {
        rep.k_total = base - 1;
        rep.k_closed = base;
    }
    if (rep.k_closed) {
        rep.d_tilde = d_tilde(g, *rep.k_closed - 1);
        rep.prob_closed = probabilistic_closed_bound(g, *rep.k_closed);
    } else {
        rep.prob_closed = Bound::inapplicable("needs delta >= 1");
    }
    if (rep.k_total && *rep.k_total >= 1) {
        rep.d_hat = d_hat(g, *rep.k_total);
        rep.prob_total = probabilistic_total_bound(g, *rep.k_total);
    } else {
        rep.prob_total = Bound::inapplicable("needs delta > k >= 1");
    }

    if (rep.r) {
        auto pb = regular_bounds(*rep.r, rep.n);
        rep.regular_total = pb.total;
        rep.regular_closed = pb.closed;
    } else {
        rep.regular_total = Bound::inapplicable("graph is not regular");
        rep.regular_closed = Bound::inapplicable("graph is not regular");
    }
    return rep;
}

} // namespace ktdom
