#pragma once

#include "ktdom/domination.hpp"
#include "ktdom/graph.hpp"

#include <cstdint>

namespace ktdom {

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

enum class ExactStatus {
    optimal,          // size and witness are a proven minimum
    infeasible,       // some vertex can never reach k
    budget_exhausted, // search stopped early; size/witness are only the incumbent
};

std::string_view to_string(ExactStatus s);

struct ExactResult {
    ExactStatus status = ExactStatus::infeasible;
    std::size_t size = 0;
    VertexSet witness;
    std::uint64_t nodes = 0;

    bool proven() const noexcept { return status == ExactStatus::optimal; }
};

/// Minimum k-tuple dominating set (open or closed neighbourhoods) by
/// depth-first branch and bound. Never reports an unproven size as optimal.
ExactResult exact_gamma(const Graph& g, std::size_t k, Variant variant,
                        std::uint64_t budget = kDefaultNodeBudget);

inline ExactResult exact_gamma_total(const Graph& g, std::size_t k,
                                     std::uint64_t budget = kDefaultNodeBudget)
{
    return exact_gamma(g, k, Variant::total, budget);
}

inline ExactResult exact_gamma_closed(const Graph& g, std::size_t k,
                                      std::uint64_t budget = kDefaultNodeBudget)
{
    return exact_gamma(g, k, Variant::closed, budget);
}

} // namespace ktdom
