#pragma once

#include "ktdom/graph.hpp"

#include <optional>
#include <span>
#include <string>

namespace ktdom {

/// A real-valued upper bound that may not apply to a given graph.
struct Bound {
    std::optional<double> value;
    std::string inapplicable_reason; // set iff !value
    bool vacuous = false;            // value exceeds n

    bool applicable() const noexcept { return value.has_value(); }

    static Bound of(double v, std::size_t n);
    static Bound inapplicable(std::string reason);
};

/// Average of C(d(v)+1, m) over the vertices.
double d_tilde(const Graph& g, std::size_t m);
double d_tilde(std::span<const std::size_t> degrees, std::size_t m);

/// Average of C(d(v), m) over the vertices.
double d_hat(const Graph& g, std::size_t m);
double d_hat(std::span<const std::size_t> degrees, std::size_t m);

/// Probabilistic k-tuple domination bound
/// (ln(δ-k+2) + ln d̃_{k-1} + 1) / (δ-k+2) · n, valid for 1 <= k <= δ+1.
Bound probabilistic_closed_bound(const Graph& g, std::size_t k);

/// Probabilistic k-tuple total domination bound
/// (ln(δ-k) + ln d̂_k + 1) / (δ-k) · n, valid for δ > k >= 1.
Bound probabilistic_total_bound(const Graph& g, std::size_t k);

struct RegularBounds {
    Bound total;  // (r(r-1)-1)/(r(r-1)) · n, r >= 3
    Bound closed; // (r²-1)/r² · n, r >= 2
};

RegularBounds regular_bounds(std::size_t r, std::size_t n);

struct BoundReport {
    std::size_t n = 0;
    std::optional<std::size_t> r;
    std::optional<std::size_t> k_total;  // r-1 when regular
    std::optional<std::size_t> k_closed; // r when regular
    double d_tilde = 0;                  // d̃_{k_closed - 1}
    double d_hat = 0;                    // d̂_{k_total}
    Bound prob_closed;
    Bound prob_total;
    Bound regular_total;
    Bound regular_closed;
};

/// Side-by-side bounds. For an r-regular graph, the total slot uses k = r-1
/// and the closed slot k = r; other graphs use k = δ-1 and k = δ for the
/// probabilistic bounds and leave the regular-graph bounds inapplicable.
BoundReport compare_report(const Graph& g);

} // namespace ktdom
