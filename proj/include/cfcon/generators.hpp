#pragma once

#include <cstdint>

#include "cfcon/graph.hpp"

namespace cfcon {

// G(n, p): every pair (u, v), u < v, visited in lexicographic order and kept
// with probability p. Identical (n, p, seed) give identical edge lists.
Graph gen_gnp(int n, double p, std::uint64_t seed);

// Random simple r-regular graph from the pairing model, resampling whenever
// the pairing produces a loop or a repeated pair. Throws InputError when n*r
// is odd or r >= n, GenerationError after kRegularResampleCap failed pairings.
inline constexpr int kRegularResampleCap = 1000;
Graph gen_random_regular(int n, int r, std::uint64_t seed);

// clamp((ln n + a) / n, 0, 1).
double threshold_p(double n, double a);

// (ln n + ln ln n + margin) / n, clamped to [0, 1]. Needs n >= 3.
double hamilton_p(double n, double margin);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);

}  // namespace cfcon
