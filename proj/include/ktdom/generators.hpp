#pragma once

#include "ktdom/graph.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace ktdom {

/// Identifies the sampling procedure so corpora can be regenerated elsewhere:
/// std::mt19937_64 seeded with the 64-bit seed; bounded draws by rejecting
/// raw outputs at or above the largest multiple of the bound. Each attempt
/// resets the stub list (v repeated r times, in vertex order) and runs a
/// forward Fisher–Yates shuffle, pairing stubs 2i and 2i+1 as soon as both
/// are fixed and abandoning the attempt at the first loop or repeated edge.
/// Simple but disconnected results are also rejected.
inline constexpr std::string_view kGeneratorId = "mt19937_64/rejection/pairing-v2";

/// A pairing is simple with probability about exp(-(r²-1)/4), roughly 6e-6
/// at r = 7 and lower still for small n, so the cap is sized for r <= 7.
inline constexpr std::size_t kPairingRetryCap = 20'000'000;

/// Uniform integer in [0, bound) from one or more raw engine outputs.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Simple connected r-regular graph on n vertices sampled by the pairing
/// model with full rejection. Deterministic in (n, r, seed).
Graph random_regular(std::size_t n, std::size_t r, std::uint64_t seed);

/// G(n, p) with the same random source; used for irregular test corpora.
Graph random_gnp(std::size_t n, double p, std::uint64_t seed);

} // namespace ktdom
