#include "cfcon/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cfcon/errors.hpp"
#include "cfcon/rng.hpp"

namespace cfcon {

namespace {

bool allowed(std::span<const char> mask, EdgeId e) { return mask.empty() || mask[e]; }

}  // namespace

std::vector<int> component_labels(const Graph& g, std::span<const char> edge_mask) {
    const int n = g.vertex_count();
    std::vector<int> label(n, -1);
    std::vector<Vertex> queue;
    queue.reserve(n);
    int next = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (label[s] != -1) continue;
        label[s] = next;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (const Incidence& inc : g.neighbors(queue[head])) {
                if (label[inc.neighbor] == -1 && allowed(edge_mask, inc.edge)) {
                    label[inc.neighbor] = next;
                    queue.push_back(inc.neighbor);
                }
            }
        }
        ++next;
    }
    return label;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    auto label = component_labels(g);
    return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

BlockDecomposition decompose_blocks(const Graph& g, std::span<const char> edge_mask) {
    const int n = g.vertex_count();
    BlockDecomposition out;
    out.edge_block.assign(g.edge_count(), -1);
    out.is_articulation.assign(n, 0);
    out.is_bridge.assign(g.edge_count(), 0);

    std::vector<int> disc(n, -1), low(n, 0);
    struct Frame {
        Vertex v;
        EdgeId parent_edge;
        int next;  // index into neighbors(v)
    };
    std::vector<Frame> stack;
    std::vector<EdgeId> edge_stack;
    int time = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        disc[root] = low[root] = time++;
        int root_children = 0;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nbrs = g.neighbors(f.v);
            if (f.next < static_cast<int>(nbrs.size())) {
                const Incidence inc = nbrs[f.next++];
                if (inc.edge == f.parent_edge || !allowed(edge_mask, inc.edge)) continue;
                const Vertex w = inc.neighbor;
                if (disc[w] == -1) {
                    edge_stack.push_back(inc.edge);
                    disc[w] = low[w] = time++;
                    if (f.v == root) ++root_children;
                    stack.push_back({w, inc.edge, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back(inc.edge);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (stack.empty()) break;
            const Vertex parent = stack.back().v;
            low[parent] = std::min(low[parent], low[done.v]);
            if (low[done.v] >= disc[parent]) {
                if (parent != root) out.is_articulation[parent] = 1;
                const int block = out.block_count++;
                for (;;) {
                    EdgeId e = edge_stack.back();
                    edge_stack.pop_back();
                    out.edge_block[e] = block;
                    if (e == done.parent_edge) break;
                }
                if (low[done.v] > disc[parent]) out.is_bridge[done.parent_edge] = 1;
            }
        }
        if (root_children > 1) out.is_articulation[root] = 1;
    }
    return out;
}

CutStructure find_bridges(const Graph& g) {
    auto blocks = decompose_blocks(g);
    CutStructure out;
    std::vector<std::pair<int, int>> pairs;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (blocks.is_bridge[e]) {
            out.bridges.push_back(e);
            pairs.emplace_back(g.edge(e).u, g.edge(e).v);
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (blocks.is_articulation[v]) out.articulation_points.push_back(v);
    }
    out.cut_edge_subgraph = Graph(g.vertex_count(), pairs);
    return out;
}

bool is_two_edge_connected(const Graph& g) {
    return g.vertex_count() >= 2 && is_connected(g) && find_bridges(g).bridges.empty();
}

bool is_two_connected(const Graph& g) {
    return g.vertex_count() >= 3 && is_connected(g) &&
           find_bridges(g).articulation_points.empty();
}

bool cjv_condition(const Graph& g) {
    if (!is_connected(g)) throw InputError("cjv_condition needs a connected graph");
    const Graph& c = find_bridges(g).cut_edge_subgraph;
    // C(G) is a forest, so a component has order 2 exactly when both ends of
    // each of its edges have no other bridge.
    for (const Edge& e : c.edges()) {
        if (c.degree(e.u) != 1 || c.degree(e.v) != 1) return false;
    }
    return true;
}

VertexPartition classify_vertices(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw InputError("classify_vertices needs n >= 2");
    return classify_vertices(g, std::log(static_cast<double>(n)) / 10.0);
}

VertexPartition classify_vertices(const Graph& g, double threshold) {
    VertexPartition out;
    out.threshold = threshold;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        (g.degree(v) >= threshold ? out.large : out.small).push_back(v);
    }
    return out;
}

namespace {

constexpr std::size_t kMaxWitnesses = 16;

void add_violation(CheckReport& r, std::vector<Vertex> witness) {
    r.pass = false;
    ++r.violations;
    if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(std::move(witness));
}

std::vector<Vertex> sorted(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

Prop2Report check_prop2(const Graph& g, const VertexPartition& partition) {
    const int n = g.vertex_count();
    Prop2Report r;

    r.small_count.check_name = "prop2_small_count";
    const long long count_bound = static_cast<long long>(std::floor(std::pow(n, 0.4)));
    r.small_count.trials = 1;
    r.small_count.detail = "|V1| = " + std::to_string(partition.small.size()) +
                           ", bound floor(n^0.4) = " + std::to_string(count_bound);
    if (static_cast<long long>(partition.small.size()) > count_bound) {
        add_violation(r.small_count, partition.small);
    }

    std::vector<char> small(n, 0);
    for (Vertex v : partition.small) small[v] = 1;

    r.small_distance.check_name = "prop2_small_distance";
    r.small_distance.trials = static_cast<long long>(partition.small.size());
    // A small pair at distance 1 or 2 shows up as a small neighbor or a small
    // vertex two steps away; each pair is reported once, from its lower end.
    std::vector<int> stamp(n, -1);
    for (Vertex x : partition.small) {
        for (const Incidence& a : g.neighbors(x)) {
            const Vertex w = a.neighbor;
            if (small[w] && w > x && stamp[w] != x) {
                stamp[w] = x;
                add_violation(r.small_distance, {x, w});
            }
            for (const Incidence& b : g.neighbors(w)) {
                const Vertex y = b.neighbor;
                if (y > x && small[y] && stamp[y] != x) {
                    stamp[y] = x;
                    add_violation(r.small_distance, {x, y});
                }
            }
        }
    }

    r.small_edges.check_name = "prop2_small_edges";
    r.small_edges.trials = 1;
    const long long edge_bound = static_cast<long long>(std::floor(std::sqrt(static_cast<double>(n))));
    long long touching = 0;
    for (const Edge& e : g.edges()) touching += (small[e.u] || small[e.v]);
    r.small_edges.detail = "edges touching V1 = " + std::to_string(touching) +
                           ", bound floor(n^0.5) = " + std::to_string(edge_bound);
    if (touching > edge_bound) add_violation(r.small_edges, partition.small);
    return r;
}

Prop1Report check_prop1_sampled(const Graph& g, double p, long long trials, std::uint64_t seed) {
    if (trials < 1) throw InputError("trials must be >= 1");
    const int n = g.vertex_count();
    Prop1Report r;
    std::vector<Vertex> order(n);

    CheckReport& sparse = r.sparse_subsets;
    sparse.check_name = "prop1_sparse_subsets";
    sparse.sampled = true;
    const int max_size = n / 38;
    if (max_size < 2) {
        sparse.applicable = false;
        sparse.detail = "floor(n/38) < 2";
    } else {
        Rng rng(substream(seed, 0));
        sparse.trials = trials;
        for (long long t = 0; t < trials; ++t) {
            const int s = static_cast<int>(rng.between(2, max_size));
            std::iota(order.begin(), order.end(), 0);
            for (int i = 0; i < s; ++i) std::swap(order[i], order[i + rng.below(n - i)]);
            std::span<const Vertex> subset(order.data(), s);
            const long long inside = induced_edge_count(g, subset);
            if (static_cast<double>(inside) >= s * static_cast<double>(n) * p / 25.0) {
                add_violation(sparse, sorted({subset.begin(), subset.end()}));
            }
        }
    }

    CheckReport& cross = r.cross_edges;
    cross.check_name = "prop1_cross_edges";
    cross.sampled = true;
    if (n < 16) {
        cross.applicable = false;
        cross.detail = "n < 16, ln ln n <= 1";
    } else {
        const int min_size = static_cast<int>(std::ceil(n / std::log(std::log(static_cast<double>(n)))));
        if (2LL * min_size > n) {
            cross.applicable = false;
            cross.detail = "two disjoint sets of size ceil(n / ln ln n) do not fit";
        } else {
            Rng rng(substream(seed, 1));
            cross.trials = trials;
            for (long long t = 0; t < trials; ++t) {
                const int s = static_cast<int>(rng.between(min_size, n - min_size));
                const int w = static_cast<int>(rng.between(min_size, n - s));
                std::iota(order.begin(), order.end(), 0);
                for (int i = 0; i < s + w; ++i) std::swap(order[i], order[i + rng.below(n - i)]);
                std::span<const Vertex> us(order.data(), s);
                std::span<const Vertex> ws(order.data() + s, w);
                if (cross_edge_count(g, us, ws) == 0) {
                    add_violation(cross, sorted({us.begin(), us.end()}));
                }
            }
        }
    }
    return r;
}

bool expansion_fails(const Graph& g, std::span<const Vertex> u, double c) {
    const auto outside = outer_neighborhood(g, u);
    return static_cast<double>(outside.size()) < c * static_cast<double>(u.size());
}

CheckReport check_expander_sampled(const Graph& g, int k, double c, long long trials,
                                   std::uint64_t seed) {
    if (k < 1) throw InputError("k must be >= 1");
    if (!(c > 0)) throw InputError("c must be positive");
    CheckReport r;
    r.check_name = "expander";
    r.sampled = true;
    const int n = g.vertex_count();
    if (n == 0) {
        r.applicable = false;
        return r;
    }
    r.trials = trials;
    const int max_size = std::min(k, n);
    Rng rng(seed);
    std::vector<Vertex> order(n);
    std::vector<char> in(n, 0);
    for (long long t = 0; t < trials; ++t) {
        const int size = static_cast<int>(rng.between(1, max_size));
        std::vector<Vertex> u;
        if (t % 2 == 0) {
            std::iota(order.begin(), order.end(), 0);
            for (int i = 0; i < size; ++i) std::swap(order[i], order[i + rng.below(n - i)]);
            u.assign(order.begin(), order.begin() + size);
        } else {
            // Random connected growth from a random seed vertex.
            std::fill(in.begin(), in.end(), 0);
            const Vertex start = static_cast<Vertex>(rng.below(n));
            u.push_back(start);
            in[start] = 1;
            std::vector<Vertex> frontier;
            while (static_cast<int>(u.size()) < size) {
                frontier.clear();
                for (Vertex a : u) {
                    for (const Incidence& inc : g.neighbors(a)) {
                        if (!in[inc.neighbor]) frontier.push_back(inc.neighbor);
                    }
                }
                if (frontier.empty()) break;
                const Vertex pick = frontier[rng.below(frontier.size())];
                in[pick] = 1;
                u.push_back(pick);
            }
        }
        if (expansion_fails(g, u, c)) add_violation(r, sorted(std::move(u)));
    }
    r.detail = r.pass ? "no violation among sampled sets (evidence only)"
                      : "violating set found (conclusive)";
    return r;
}

}  // namespace cfcon
