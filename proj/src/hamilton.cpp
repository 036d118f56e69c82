#include "cfcon/hamilton.hpp"

#include <algorithm>

#include "cfcon/errors.hpp"
#include "cfcon/structure.hpp"

namespace cfcon {

RotationPath::RotationPath(const Graph& g, Vertex start) : position_(g.vertex_count(), -1) {
    path_.reserve(g.vertex_count());
    extend(start);
}

void RotationPath::extend(Vertex v) {
    position_[v] = static_cast<int>(path_.size());
    path_.push_back(v);
}

void RotationPath::reverse_range(int from, int to) {
    std::reverse(path_.begin() + from, path_.begin() + to);
    for (int i = from; i < to; ++i) position_[path_[i]] = i;
}

void RotationPath::rotate(Vertex pivot) {
    reverse_range(position_[pivot] + 1, static_cast<int>(path_.size()));
}

void RotationPath::flip() { reverse_range(0, static_cast<int>(path_.size())); }

void RotationPath::reopen(int i) {
    std::rotate(path_.begin(), path_.begin() + i + 1, path_.end());
    for (int j = 0; j < static_cast<int>(path_.size()); ++j) position_[path_[j]] = j;
}

bool verify_cycle(const Graph& g, std::span<const Vertex> cycle, std::span<const Vertex> target) {
    const int n = g.vertex_count();
    std::vector<char> want(n, target.empty() ? 1 : 0);
    std::size_t want_count = target.empty() ? static_cast<std::size_t>(n) : 0;
    for (Vertex v : target) {
        if (v < 0 || v >= n) return false;
        if (!want[v]) ++want_count;
        want[v] = 1;
    }
    if (cycle.size() != want_count || cycle.size() < 3) return false;
    std::vector<char> seen(n, 0);
    for (Vertex v : cycle) {
        if (v < 0 || v >= n || !want[v] || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
    }
    return true;
}

std::optional<std::vector<Vertex>> exact_hamiltonian_cycle(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 20) throw InputError("exact Hamiltonian search is limited to n <= 20");
    if (n < 3) return std::nullopt;

    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    // ends[mask]: vertices v such that some path from 0 visits exactly mask
    // and stops at v. Only masks containing vertex 0 are filled.
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    ends[1] = 1;
    for (std::uint32_t mask = 1; mask <= full; mask += 2) {
        std::uint32_t e = ends[mask];
        while (e) {
            const int v = __builtin_ctz(e);
            e &= e - 1;
            std::uint32_t next = adj[v] & ~mask;
            while (next) {
                const int w = __builtin_ctz(next);
                next &= next - 1;
                ends[mask | (1u << w)] |= 1u << w;
            }
        }
    }
    const std::uint32_t closing = ends[full] & adj[0];
    if (!closing) return std::nullopt;

    std::vector<Vertex> cycle;
    std::uint32_t mask = full;
    int v = __builtin_ctz(closing);
    while (v != 0) {
        cycle.push_back(v);
        const std::uint32_t prev_mask = mask & ~(1u << v);
        const std::uint32_t options = ends[prev_mask] & adj[v];
        mask = prev_mask;
        v = __builtin_ctz(options);
    }
    cycle.push_back(0);
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
}

namespace {

// One rotation-extension run. Returns a Hamiltonian cycle or nothing.
std::optional<std::vector<Vertex>> rotation_extension(const Graph& g, Rng& rng, long long budget) {
    const int n = g.vertex_count();
    RotationPath path(g, static_cast<Vertex>(rng.below(n)));
    std::vector<Vertex> options;
    long long rotations = 0;

    auto unvisited_neighbors = [&](Vertex v) {
        options.clear();
        for (const Incidence& inc : g.neighbors(v)) {
            if (!path.contains(inc.neighbor)) options.push_back(inc.neighbor);
        }
    };

    for (;;) {
        unvisited_neighbors(path.tail());
        if (!options.empty()) {
            path.extend(options[rng.below(options.size())]);
            continue;
        }
        const bool closes = path.size() >= 3 && g.adjacent(path.tail(), path.head());
        if (closes && static_cast<int>(path.size()) == n) {
            return std::vector<Vertex>(path.vertices().begin(), path.vertices().end());
        }
        if (closes) {
            // Open the cycle next to a vertex that can reach outside it.
            std::vector<int> exits;
            for (int i = 0; i < static_cast<int>(path.size()); ++i) {
                unvisited_neighbors(path.vertices()[i]);
                if (!options.empty()) exits.push_back(i);
            }
            if (exits.empty()) return std::nullopt;  // the path spans a whole component
            path.reopen(exits[rng.below(exits.size())]);
            continue;
        }
        if (rotations++ >= budget) return std::nullopt;
        options.clear();
        const int limit = static_cast<int>(path.size()) - 2;
        for (const Incidence& inc : g.neighbors(path.tail())) {
            const int pos = path.position(inc.neighbor);
            if (pos >= 0 && pos < limit) options.push_back(inc.neighbor);
        }
        if (options.empty() || rng.below(16) == 0) {
            path.flip();
            continue;
        }
        path.rotate(options[rng.below(options.size())]);
    }
}

}  // namespace

HamiltonResult hamiltonian_cycle(const Graph& g, std::uint64_t seed, const HamiltonOptions& opts) {
    const int n = g.vertex_count();
    HamiltonResult out;
    // Structural refutations are definitive.
    if (n < 3 || !is_connected(g)) {
        out.kind = SearchKind::exact;
        return out;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) < 2) {
            out.kind = SearchKind::exact;
            return out;
        }
    }
    const long long budget = static_cast<long long>(opts.rotations_per_vertex) * n;
    for (int r = 0; r < opts.restarts; ++r) {
        Rng rng(substream(seed, static_cast<std::uint64_t>(r)));
        if (auto cycle = rotation_extension(g, rng, budget)) {
            out.cycle = std::move(cycle);
            out.kind = SearchKind::heuristic;
            return out;
        }
    }
    if (n <= opts.exact_cutoff) {
        out.cycle = exact_hamiltonian_cycle(g);
        out.kind = SearchKind::exact;
    }
    return out;
}

HamiltonResult hamiltonian_cycle(const Graph& g, int restarts, std::uint64_t seed) {
    HamiltonOptions opts;
    opts.restarts = restarts;
    return hamiltonian_cycle(g, seed, opts);
}

HamiltonResult hamiltonian_cycle_on_subset(const Graph& g, std::span<const Vertex> subset,
                                           int restarts, std::uint64_t seed) {
    if (subset.size() < 3) throw InputError("Hamiltonian cycle needs a vertex set of size >= 3");
    const Graph sub = g.induced(subset);
    HamiltonResult out = hamiltonian_cycle(sub, restarts, seed);
    if (out.cycle) {
        for (Vertex& v : *out.cycle) v = subset[v];
    }
    return out;
}

}  // namespace cfcon
