#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cfcon/graph.hpp"

namespace cfcon {

bool is_connected(const Graph& g);

// Component label per vertex, labels 0..k-1 in order of smallest member.
// Only edges with mask[e] != 0 are used when a mask is given.
std::vector<int> component_labels(const Graph& g, std::span<const char> edge_mask = {});

// Biconnected decomposition from one low-link pass. Edges outside the mask
// (when given) are treated as absent and get block -1.
struct BlockDecomposition {
    std::vector<int> edge_block;
    int block_count = 0;
    std::vector<char> is_articulation;
    std::vector<char> is_bridge;
};
BlockDecomposition decompose_blocks(const Graph& g, std::span<const char> edge_mask = {});

struct CutStructure {
    std::vector<EdgeId> bridges;              // ascending
    std::vector<Vertex> articulation_points;  // ascending
    // C(G): bridge edges over the vertex set of G. Its edge i is bridges[i].
    Graph cut_edge_subgraph;
};
CutStructure find_bridges(const Graph& g);

bool is_two_edge_connected(const Graph& g);
bool is_two_connected(const Graph& g);

// True iff every component of C(G) is a single edge. Throws InputError on a
// disconnected graph.
bool cjv_condition(const Graph& g);

struct VertexPartition {
    std::vector<Vertex> small;  // degree < threshold
    std::vector<Vertex> large;  // degree >= threshold
    double threshold = 0.0;
};

// Small/large split at ln(n) / 10.
VertexPartition classify_vertices(const Graph& g);
VertexPartition classify_vertices(const Graph& g, double threshold);

// Result of one structural check. `sampled` marks checks whose pass is only
// evidence; `applicable` is false when the graph is too small for the bounds
// to mean anything.
struct CheckReport {
    std::string check_name;
    bool pass = true;
    bool applicable = true;
    bool sampled = false;
    long long trials = 0;
    long long violations = 0;
    std::vector<std::vector<Vertex>> witnesses;
    std::string detail;
};

struct Prop2Report {
    CheckReport small_count;     // |V1| <= floor(n^0.4)
    CheckReport small_distance;  // small vertices pairwise at distance >= 3
    CheckReport small_edges;     // edges touching V1 <= floor(n^0.5)
    bool all_pass() const { return small_count.pass && small_distance.pass && small_edges.pass; }
};
Prop2Report check_prop2(const Graph& g, const VertexPartition& partition);

struct Prop1Report {
    CheckReport sparse_subsets;  // e(S) < |S| n p / 25 for 2 <= |S| <= floor(n/38)
    CheckReport cross_edges;     // e(U, W) > 0 for |U|, |W| >= ceil(n / ln ln n)
};
Prop1Report check_prop1_sampled(const Graph& g, double p, long long trials, std::uint64_t seed);

// |N(U) \ U| >= c |U| for sampled U with 1 <= |U| <= k. Half the samples
// are uniform subsets, half are grown as connected sets.
CheckReport check_expander_sampled(const Graph& g, int k, double c, long long trials,
                                   std::uint64_t seed);

// Direct test of one set: true when |N(U) \ U| < c |U|.
bool expansion_fails(const Graph& g, std::span<const Vertex> u, double c);

}  // namespace cfcon
