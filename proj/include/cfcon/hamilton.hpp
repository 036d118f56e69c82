#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cfcon/graph.hpp"
#include "cfcon/rng.hpp"

namespace cfcon {

enum class SearchKind { heuristic, exact };

struct HamiltonResult {
    std::optional<std::vector<Vertex>> cycle;  // cyclic vertex order
    SearchKind kind = SearchKind::heuristic;   // which search produced the answer
    bool found() const { return cycle.has_value(); }
};

struct HamiltonOptions {
    int restarts = 50;
    int rotations_per_vertex = 20;
    int exact_cutoff = 18;  // graphs this small also get an exact search
};

// Rotation-extension search with randomized restarts. Restart i draws from
// substream(seed, i). For n <= exact_cutoff a failed heuristic falls through
// to an exact search, so not-found with kind == exact is definitive.
HamiltonResult hamiltonian_cycle(const Graph& g, std::uint64_t seed, const HamiltonOptions& opts = {});
HamiltonResult hamiltonian_cycle(const Graph& g, int restarts, std::uint64_t seed);

// Hamiltonian cycle of G[S], reported in vertex labels of G. |S| >= 3.
HamiltonResult hamiltonian_cycle_on_subset(const Graph& g, std::span<const Vertex> subset,
                                           int restarts, std::uint64_t seed);

// Exact search (subset dynamic programming). Needs n <= 20.
std::optional<std::vector<Vertex>> exact_hamiltonian_cycle(const Graph& g);

// Cycle covers `target` exactly once each and consecutive vertices
// (cyclically) are adjacent in g. An empty target means all of V(g).
bool verify_cycle(const Graph& g, std::span<const Vertex> cycle, std::span<const Vertex> target = {});

// Path state for rotation-extension: a simple path with O(1) position
// lookup. Rotations act on the tail end.
class RotationPath {
public:
    RotationPath(const Graph& g, Vertex start);

    std::span<const Vertex> vertices() const { return path_; }
    std::size_t size() const { return path_.size(); }
    Vertex head() const { return path_.front(); }
    Vertex tail() const { return path_.back(); }
    bool contains(Vertex v) const { return position_[v] >= 0; }
    int position(Vertex v) const { return position_[v]; }

    void extend(Vertex v);

    // Given a neighbor w of the tail lying at position i < size - 2,
    // reverses path[i+1..]. The new tail is the old path[i+1].
    void rotate(Vertex pivot);

    // Reverses the whole path so the other end becomes the tail.
    void flip();

    // Requires head and tail adjacent. Opens the implied cycle between
    // path[i] and path[i+1] so that path[i] becomes the new tail.
    void reopen(int i);

private:
    void reverse_range(int from, int to);

    std::vector<Vertex> path_;
    std::vector<int> position_;
};

}  // namespace cfcon
