#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cfcon {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
    Vertex u;  // u < v
    Vertex v;

    Vertex other(Vertex w) const { return w == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
    Vertex neighbor;
    EdgeId edge;
};

// Simple undirected graph with dense, stable edge ids 0..m-1. Adjacency is
// stored in CSR form with every neighbor list sorted by vertex id. Immutable
// after construction.
class Graph {
public:
    Graph() = default;

    // Builds a graph from vertex pairs. Duplicate pairs collapse onto the id
    // of their first occurrence. Throws InputError on self-loops or vertices
    // outside [0, n).
    Graph(int n, std::span<const std::pair<int, int>> pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }

    std::span<const Incidence> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }
    bool is_complete() const;

    // Spanning subgraph keeping the edges with keep[e] != 0. Edge ids are
    // renumbered densely in ascending order of the original id.
    Graph edge_subgraph(std::span<const char> keep) const;

    // Induced subgraph G[S]. Vertex i of the result is S[i].
    Graph induced(std::span<const Vertex> subset) const;

    std::vector<std::pair<int, int>> edge_pairs() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> offsets_{0};
    std::vector<Incidence> adjacency_;
};

// Queries over vertex sets. Sets are given as vertex lists; duplicates are
// ignored.

// e(S): number of edges of G[S].
long long induced_edge_count(const Graph& g, std::span<const Vertex> s);

// e(X, Y): number of edges with one endpoint in X and the other in Y.
// X and Y are expected to be disjoint.
long long cross_edge_count(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y);

// N(U, S): vertices of S \ U adjacent to some vertex of U inside G[S].
std::vector<Vertex> neighborhood_within(const Graph& g, std::span<const Vertex> u,
                                        std::span<const Vertex> s);

// N(U) \ U over the whole graph.
std::vector<Vertex> outer_neighborhood(const Graph& g, std::span<const Vertex> u);

// d_S(v) = |N(v) ∩ S|.
int degree_within(const Graph& g, Vertex v, std::span<const Vertex> s);

}  // namespace cfcon
