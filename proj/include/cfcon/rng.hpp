#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace cfcon {

// Mixes (seed, index) into an independent 64-bit seed using the SplitMix64
// finalizer. Trial i of an experiment always draws from substream(master, i),
// so results do not depend on which worker ran the trial.
std::uint64_t substream(std::uint64_t seed, std::uint64_t index);

// Thin wrapper over std::mt19937_64. The standard distributions are not
// bit-identical across library implementations, so the helpers below are
// written out explicitly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, 1) with 53 bits of resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    // Uniform in [lo, hi], inclusive.
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool bernoulli(double p) { return uniform() < p; }

    template <class T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace cfcon
