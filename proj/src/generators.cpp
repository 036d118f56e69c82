#include "cfcon/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cfcon/errors.hpp"
#include "cfcon/rng.hpp"

namespace cfcon {

Graph gen_gnp(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("p must lie in [0, 1]");
    if (n < 0) throw InputError("vertex count must be non-negative");
    Rng rng(seed);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(p * n * (n - 1) / 2.0 * 1.1) + 16);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) pairs.emplace_back(u, v);
        }
    }
    return Graph(n, pairs);
}

Graph gen_random_regular(int n, int r, std::uint64_t seed) {
    if (n < 0 || r < 0) throw InputError("n and r must be non-negative");
    if ((static_cast<long long>(n) * r) % 2 != 0) {
        throw InputError("n*r must be even (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
    }
    if (r >= n && !(n == 0 && r == 0)) throw InputError("r must be smaller than n");

    Rng rng(seed);
    std::vector<Vertex> points(static_cast<std::size_t>(n) * r);
    for (int v = 0; v < n; ++v) {
        std::fill_n(points.begin() + static_cast<std::ptrdiff_t>(v) * r, r, v);
    }
    std::vector<std::pair<int, int>> pairs(points.size() / 2);
    for (int attempt = 0; attempt < kRegularResampleCap; ++attempt) {
        rng.shuffle(std::span<Vertex>(points));
        bool simple = true;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            Vertex a = points[2 * i];
            Vertex b = points[2 * i + 1];
            if (a == b) {
                simple = false;
                break;
            }
            pairs[i] = {std::min(a, b), std::max(a, b)};
        }
        if (!simple) continue;
        std::sort(pairs.begin(), pairs.end());
        if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) continue;
        return Graph(n, pairs);
    }
    throw GenerationError("pairing model produced no simple graph in " +
                          std::to_string(kRegularResampleCap) + " attempts");
}

double threshold_p(double n, double a) {
    return std::clamp((std::log(n) + a) / n, 0.0, 1.0);
}

double hamilton_p(double n, double margin) {
    return std::clamp((std::log(n) + std::log(std::log(n)) + margin) / n, 0.0, 1.0);
}

Graph make_path(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return Graph(n, pairs);
}

Graph make_cycle(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    if (n >= 3) pairs.emplace_back(n - 1, 0);
    return Graph(n, pairs);
}

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    return Graph(n, pairs);
}

}  // namespace cfcon
