#include <algorithm>
#include <functional>

#include "cfcon/cfc.hpp"
#include "cfcon/errors.hpp"
#include "cfcon/hamilton.hpp"
#include "cfcon/rng.hpp"

namespace cfcon {

std::string to_string(ConstructionStage stage) {
    switch (stage) {
        case ConstructionStage::precondition: return "precondition";
        case ConstructionStage::matching: return "matching";
        case ConstructionStage::hamilton: return "hamilton";
        case ConstructionStage::spanning: return "spanning";
        case ConstructionStage::done: return "done";
    }
    return "unknown";
}

MatchingOutcome build_pendant_matching(const Graph& g, const VertexPartition& partition) {
    const int n = g.vertex_count();
    std::vector<char> large(n, 0);
    for (Vertex v : partition.large) large[v] = 1;

    MatchingOutcome out;
    std::vector<Vertex> partner(n, -1);  // large -> small
    bool stuck = false;
    for (Vertex s : partition.small) {
        bool matched = false;
        for (const Incidence& inc : g.neighbors(s)) {
            if (large[inc.neighbor] && partner[inc.neighbor] == -1) {
                partner[inc.neighbor] = s;
                matched = true;
                break;
            }
        }
        if (!matched) {
            stuck = true;
            break;
        }
    }

    if (stuck) {
        // Kuhn's augmenting paths from each small vertex.
        out.used_fallback = true;
        std::fill(partner.begin(), partner.end(), -1);
        std::vector<int> visited(n, -1);
        std::function<bool(Vertex, int)> augment = [&](Vertex s, int round) -> bool {
            for (const Incidence& inc : g.neighbors(s)) {
                const Vertex l = inc.neighbor;
                if (!large[l] || visited[l] == round) continue;
                visited[l] = round;
                if (partner[l] == -1 || augment(partner[l], round)) {
                    partner[l] = s;
                    return true;
                }
            }
            return false;
        };
        for (std::size_t i = 0; i < partition.small.size(); ++i) {
            if (!augment(partition.small[i], static_cast<int>(i))) {
                out.unsaturated = partition.small[i];
                return out;
            }
        }
    }

    PendantMatching m;
    std::vector<Vertex> mate(n, -1);
    for (Vertex l = 0; l < n; ++l) {
        if (partner[l] != -1) mate[partner[l]] = l;
    }
    for (Vertex s : partition.small) m.pairs.emplace_back(s, mate[s]);
    out.matching = std::move(m);
    return out;
}

namespace {

void check_preconditions(const Graph& g) {
    if (g.vertex_count() < 3) throw InputError("construction needs n >= 3");
    if (!is_connected(g)) throw InputError("construction needs a connected graph");
}

}  // namespace

Construction construct_cfc2_coloring(const Graph& g, std::uint64_t seed, int restarts) {
    check_preconditions(g);
    return construct_cfc2_coloring(g, classify_vertices(g), seed, restarts);
}

Construction construct_cfc2_coloring(const Graph& g, const VertexPartition& partition,
                                     std::uint64_t seed, int restarts) {
    check_preconditions(g);
    const int n = g.vertex_count();
    Construction out;
    out.partition = partition;

    out.stage = ConstructionStage::matching;
    MatchingOutcome matching = build_pendant_matching(g, out.partition);
    if (!matching.matching) {
        out.message = "small vertex " + std::to_string(*matching.unsaturated) +
                      " has no large partner in a maximum matching";
        return out;
    }
    out.matching = std::move(*matching.matching);

    out.stage = ConstructionStage::hamilton;
    if (out.partition.large.size() < 3) {
        out.message = "fewer than 3 large vertices";
        return out;
    }
    HamiltonResult ham = hamiltonian_cycle_on_subset(g, out.partition.large, restarts, seed);
    if (!ham.found()) {
        out.message = std::string("no Hamiltonian cycle on the large vertices (") +
                      (ham.kind == SearchKind::exact ? "exact" : "heuristic") + ")";
        return out;
    }
    out.cycle = std::move(*ham.cycle);

    out.stage = ConstructionStage::spanning;
    std::vector<char> in_subgraph(g.edge_count(), 0);
    std::vector<char> covered(n, 0);
    std::vector<EdgeId> cycle_edges;
    for (std::size_t i = 0; i < out.cycle.size(); ++i) {
        const Vertex x = out.cycle[i];
        const Vertex y = out.cycle[(i + 1) % out.cycle.size()];
        const EdgeId e = *g.find_edge(x, y);
        cycle_edges.push_back(e);
        in_subgraph[e] = 1;
        covered[x] = 1;
    }
    for (auto [s, l] : out.matching.pairs) {
        in_subgraph[*g.find_edge(s, l)] = 1;
        covered[s] = covered[l] = 1;
    }
    const auto missing = std::find(covered.begin(), covered.end(), 0);
    if (missing != covered.end()) {
        out.message = "vertex " + std::to_string(missing - covered.begin()) +
                      " is not covered by the cycle or the matching";
        return out;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (in_subgraph[e]) out.spanning_edges.push_back(e);
    }

    out.designated_edge = *std::min_element(cycle_edges.begin(), cycle_edges.end());
    out.coloring = EdgeColoring::uniform(g.edge_count(), 1);
    out.coloring.colors[out.designated_edge] = 2;
    out.coloring.palette_size = 2;
    out.stage = ConstructionStage::done;
    return out;
}

namespace {

// Restricted-growth enumeration: edge 0 takes color 1 and each edge may use
// at most one color beyond the largest seen so far, capped at k. Visits every
// coloring with at most k colors once up to renaming of colors.
bool enumerate_canonical(const Graph& g, int k, EdgeColoring& coloring) {
    const int m = g.edge_count();
    coloring.colors.assign(m, 1);
    coloring.palette_size = k;
    std::vector<int> prefix_max(m + 1, 0);
    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == m) return conflict_free_connected(g, coloring);
        const int limit = std::min(k, prefix_max[i] + 1);
        for (int c = 1; c <= limit; ++c) {
            coloring.colors[i] = c;
            prefix_max[i + 1] = std::max(prefix_max[i], c);
            if (place(i + 1)) return true;
        }
        return false;
    };
    return place(0);
}

}  // namespace

ExactResult cfc_exact(const Graph& g, int max_k, int edge_budget) {
    if (g.vertex_count() < 2) throw InputError("cfc is defined for connected graphs with n >= 2");
    if (!is_connected(g)) throw InputError("cfc is defined for connected graphs only");
    if (g.edge_count() > edge_budget) {
        throw BudgetError("graph has " + std::to_string(g.edge_count()) +
                          " edges, exact search budget is " + std::to_string(edge_budget));
    }
    ExactResult out;
    if (max_k < 1) return out;
    // With one color only single-edge paths are conflict-free.
    if (g.is_complete()) {
        out.value = 1;
        out.coloring = EdgeColoring::uniform(g.edge_count(), 1);
        return out;
    }
    for (int k = 2; k <= max_k; ++k) {
        EdgeColoring coloring;
        if (enumerate_canonical(g, k, coloring)) {
            int used = *std::max_element(coloring.colors.begin(), coloring.colors.end());
            coloring.palette_size = used;
            out.value = k;
            out.coloring = std::move(coloring);
            return out;
        }
    }
    return out;
}

UpperBound cfc_upper(const Graph& g, std::uint64_t seed, const UpperOptions& opts) {
    if (g.vertex_count() < 2) throw InputError("cfc is defined for connected graphs with n >= 2");
    if (!is_connected(g)) throw InputError("cfc is defined for connected graphs only");
    const int m = g.edge_count();
    CertifyOptions cert_opts;
    cert_opts.seed = seed;

    UpperBound out;
    auto settle = [&](int bound, const char* method, EdgeColoring coloring) {
        out.bound = bound;
        out.method = method;
        out.certificate = is_conflict_free_connected(g, coloring, cert_opts);
        out.coloring = std::move(coloring);
    };

    if (g.is_complete()) {
        settle(1, "complete", EdgeColoring::uniform(m, 1));
        return out;
    }

    Construction built = construct_cfc2_coloring(g, substream(seed, 0), opts.hamilton_restarts);
    out.construction_stage = built.stage;
    if (built.ok()) {
        CfcCertificate cert = is_conflict_free_connected(g, built.coloring, cert_opts);
        if (cert.certified()) {
            out.bound = 2;
            out.method = "constructive";
            out.coloring = std::move(built.coloring);
            out.certificate = std::move(cert);
            return out;
        }
    }

    Rng rng(substream(seed, 1));
    EdgeColoring random{std::vector<int>(m, 1), 2};
    for (int i = 0; i < opts.random_colorings; ++i) {
        for (int& c : random.colors) c = rng.bernoulli(0.5) ? 2 : 1;
        if (conflict_free_connected(g, random)) {
            settle(2, "randomized", random);
            return out;
        }
    }

    if (m <= kDefaultEdgeBudget) {
        ExactResult exact = cfc_exact(g, opts.exact_max_k, kDefaultEdgeBudget);
        if (exact.value) {
            settle(*exact.value, "exact", std::move(exact.coloring));
            return out;
        }
    }

    // Distinct colors make every path conflict-free.
    EdgeColoring distinct{std::vector<int>(m), m};
    for (int e = 0; e < m; ++e) distinct.colors[e] = e + 1;
    settle(m, "trivial", std::move(distinct));
    return out;
}

}  // namespace cfcon
