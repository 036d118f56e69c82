#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cfcon/graph.hpp"
#include "cfcon/structure.hpp"

namespace cfcon {

// Total edge coloring c : E(G) -> {1..palette_size}, indexed by edge id.
struct EdgeColoring {
    std::vector<int> colors;
    int palette_size = 0;

    static EdgeColoring uniform(int edge_count, int color = 1) {
        return {std::vector<int>(edge_count, color), edge_count > 0 ? color : 0};
    }
};

// Throws InputError unless the coloring is total over g and in range.
void validate_coloring(const Graph& g, const EdgeColoring& coloring);

// Coloring file: header "m t", then one "edge_id color" line per edge.
EdgeColoring read_coloring(std::istream& in, const Graph& g);
void write_coloring(std::ostream& out, const EdgeColoring& coloring);

// True iff some color occurs exactly once in the list.
bool has_unique_color(std::span<const int> colors);

// Path given as edge ids. Throws InputError if the edges do not form a
// simple path.
bool is_conflict_free_path(const Graph& g, const EdgeColoring& coloring, std::span<const EdgeId> path);

// Path given as a vertex sequence. Returns false (rather than throwing) for
// sequences that are not simple paths of g.
bool is_conflict_free_vertex_path(const Graph& g, const EdgeColoring& coloring,
                                  std::span<const Vertex> path);

// A simple u-v path through edge e using only edges with allowed[e] != 0
// (e itself must be allowed). Exact: found by a two-path flow, so nullopt
// means no such path exists.
std::optional<std::vector<Vertex>> path_through_edge(const Graph& g, std::span<const char> allowed,
                                                     EdgeId e, Vertex u, Vertex v);

// A conflict-free u-v path, or nullopt if none exists. A path is
// conflict-free iff for some color c it uses exactly one c-edge, so the
// search tries every edge e with the other edges of its color removed.
std::optional<std::vector<Vertex>> find_conflict_free_path(const Graph& g, const EdgeColoring& coloring,
                                                           Vertex u, Vertex v);

struct Witness {
    Vertex u;
    Vertex v;
    std::vector<Vertex> path;
};

struct CfcCertificate {
    enum class Status { certified, refuted };

    Status status = Status::refuted;
    std::optional<std::pair<Vertex, Vertex>> failing_pair;  // lexicographically first
    long long witness_count = 0;     // pairs proven to have a conflict-free path
    bool complete_witnesses = false; // witnesses lists every pair
    std::vector<Witness> witnesses;  // each re-validated against g

    bool certified() const { return status == Status::certified; }
};

struct CertifyOptions {
    int full_witness_limit = 100;  // store every witness when n <= this
    int sampled_witnesses = 32;
    std::uint64_t seed = 0;
};

// Decides whether every pair of distinct vertices has a conflict-free path.
// Throws InputError on a disconnected graph.
CfcCertificate is_conflict_free_connected(const Graph& g, const EdgeColoring& coloring,
                                          const CertifyOptions& opts = {});

// Decision only, no witnesses.
bool conflict_free_connected(const Graph& g, const EdgeColoring& coloring);

struct PendantMatching {
    std::vector<std::pair<Vertex, Vertex>> pairs;  // (small, large)
};

struct MatchingOutcome {
    std::optional<PendantMatching> matching;
    std::optional<Vertex> unsaturated;  // set on failure
    bool used_fallback = false;         // greedy pass conflicted
};

// Matches every small vertex to a distinct large neighbor. Greedy first;
// maximum bipartite matching if greedy gets stuck.
MatchingOutcome build_pendant_matching(const Graph& g, const VertexPartition& partition);

enum class ConstructionStage { precondition, matching, hamilton, spanning, done };
std::string to_string(ConstructionStage stage);

struct Construction {
    ConstructionStage stage = ConstructionStage::precondition;  // done on success
    std::string message;
    VertexPartition partition;
    PendantMatching matching;
    std::vector<Vertex> cycle;            // Hamiltonian cycle of G[V2]
    std::vector<EdgeId> spanning_edges;   // E(C) ∪ E(M), ascending
    EdgeId designated_edge = -1;          // the single color-2 edge
    EdgeColoring coloring;                // over all of E(G)

    bool ok() const { return stage == ConstructionStage::done; }
};

// Two-coloring built from a Hamiltonian cycle on the large vertices plus a
// matching of the small ones: the lowest-id cycle edge gets color 2,
// everything else color 1. The coloring is not certified here. Complete
// graphs are accepted even though one color suffices for them.
// Throws InputError unless g is connected with n >= 3.
Construction construct_cfc2_coloring(const Graph& g, std::uint64_t seed, int restarts = 50);

// Same pipeline with a caller-chosen small/large split instead of the
// ln(n)/10 degree threshold.
Construction construct_cfc2_coloring(const Graph& g, const VertexPartition& partition,
                                     std::uint64_t seed, int restarts = 50);

inline constexpr int kDefaultEdgeBudget = 14;

struct ExactResult {
    std::optional<int> value;  // nullopt: no k <= max_k works
    EdgeColoring coloring;     // an optimal coloring when value is set
};

// Smallest k <= max_k admitting a conflict-free connection coloring,
// by canonical enumeration. Throws BudgetError when m > edge_budget and
// InputError on disconnected or trivial graphs.
ExactResult cfc_exact(const Graph& g, int max_k, int edge_budget = kDefaultEdgeBudget);

struct UpperOptions {
    int random_colorings = 50;
    int hamilton_restarts = 50;
    int exact_max_k = 4;
};

struct UpperBound {
    int bound = 0;
    std::string method;  // complete | constructive | randomized | exact | trivial
    std::optional<ConstructionStage> construction_stage;
    std::optional<EdgeColoring> coloring;
    std::optional<CfcCertificate> certificate;

    bool certified() const { return certificate && certificate->certified(); }
};

UpperBound cfc_upper(const Graph& g, std::uint64_t seed, const UpperOptions& opts = {});

}  // namespace cfcon
