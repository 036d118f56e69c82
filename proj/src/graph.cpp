#include "cfcon/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cfcon/errors.hpp"

namespace cfcon {

Graph::Graph(int n, std::span<const std::pair<int, int>> pairs) : n_(n) {
    if (n < 0) throw InputError("vertex count must be non-negative");

    std::vector<Edge> normalized;
    normalized.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [a, b] = pairs[i];
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw InputError("edge " + std::to_string(i) + " (" + std::to_string(a) + ", " +
                             std::to_string(b) + ") has a vertex outside [0, " +
                             std::to_string(n) + ")");
        }
        if (a == b) {
            throw InputError("edge " + std::to_string(i) + " is a self-loop at vertex " +
                             std::to_string(a));
        }
        normalized.push_back({std::min(a, b), std::max(a, b)});
    }

    // Keep the first occurrence of every pair, preserving input order.
    std::vector<std::size_t> order(normalized.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const Edge& ex = normalized[x];
        const Edge& ey = normalized[y];
        return ex.u != ey.u ? ex.u < ey.u : ex.v < ey.v;
    });
    std::vector<char> duplicate(normalized.size(), 0);
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (normalized[order[i]] == normalized[order[i - 1]]) duplicate[order[i]] = 1;
    }
    edges_.reserve(normalized.size());
    for (std::size_t i = 0; i < normalized.size(); ++i) {
        if (!duplicate[i]) edges_.push_back(normalized[i]);
    }

    std::vector<int> degree(n, 0);
    for (const Edge& e : edges_) {
        ++degree[e.u];
        ++degree[e.v];
    }
    offsets_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
    adjacency_.resize(offsets_[n]);
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 0; id < edge_count(); ++id) {
        const Edge& e = edges_[id];
        adjacency_[fill[e.u]++] = {e.v, id};
        adjacency_[fill[e.v]++] = {e.u, id};
    }
    for (int v = 0; v < n; ++v) {
        std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1],
                  [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
    }
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nbrs = neighbors(u);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                               [](const Incidence& a, Vertex x) { return a.neighbor < x; });
    if (it != nbrs.end() && it->neighbor == v) return it->edge;
    return std::nullopt;
}

bool Graph::is_complete() const {
    return static_cast<long long>(edges_.size()) == static_cast<long long>(n_) * (n_ - 1) / 2;
}

Graph Graph::edge_subgraph(std::span<const char> keep) const {
    std::vector<std::pair<int, int>> kept;
    for (EdgeId e = 0; e < edge_count(); ++e) {
        if (keep[e]) kept.emplace_back(edges_[e].u, edges_[e].v);
    }
    return Graph(n_, kept);
}

Graph Graph::induced(std::span<const Vertex> subset) const {
    std::vector<int> index(n_, -1);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 0 || subset[i] >= n_) throw InputError("subset vertex out of range");
        if (index[subset[i]] != -1) throw InputError("subset contains a repeated vertex");
        index[subset[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> kept;
    for (const Edge& e : edges_) {
        if (index[e.u] >= 0 && index[e.v] >= 0) kept.emplace_back(index[e.u], index[e.v]);
    }
    return Graph(static_cast<int>(subset.size()), kept);
}

std::vector<std::pair<int, int>> Graph::edge_pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
    return out;
}

namespace {

std::vector<char> membership(const Graph& g, std::span<const Vertex> s) {
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : s) in[v] = 1;
    return in;
}

}  // namespace

long long induced_edge_count(const Graph& g, std::span<const Vertex> s) {
    auto in = membership(g, s);
    long long count = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!in[v]) continue;
        for (const Incidence& inc : g.neighbors(v)) {
            if (inc.neighbor > v && in[inc.neighbor]) ++count;
        }
    }
    return count;
}

long long cross_edge_count(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y) {
    if (x.empty() || y.empty()) return 0;
    auto in_x = membership(g, x);
    auto in_y = membership(g, y);
    long long count = 0;
    for (const Edge& e : g.edges()) {
        if ((in_x[e.u] && in_y[e.v]) || (in_x[e.v] && in_y[e.u])) ++count;
    }
    return count;
}

std::vector<Vertex> neighborhood_within(const Graph& g, std::span<const Vertex> u,
                                        std::span<const Vertex> s) {
    auto in_s = membership(g, s);
    auto in_u = membership(g, u);
    std::vector<char> hit(g.vertex_count(), 0);
    for (Vertex a : u) {
        if (!in_s[a]) continue;
        for (const Incidence& inc : g.neighbors(a)) {
            if (in_s[inc.neighbor] && !in_u[inc.neighbor]) hit[inc.neighbor] = 1;
        }
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (hit[v]) out.push_back(v);
    }
    return out;
}

std::vector<Vertex> outer_neighborhood(const Graph& g, std::span<const Vertex> u) {
    std::vector<Vertex> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    return neighborhood_within(g, u, all);
}

int degree_within(const Graph& g, Vertex v, std::span<const Vertex> s) {
    auto in = membership(g, s);
    int d = 0;
    for (const Incidence& inc : g.neighbors(v)) d += in[inc.neighbor];
    return d;
}

}  // namespace cfcon
