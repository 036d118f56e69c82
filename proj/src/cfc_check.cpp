#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cfcon/cfc.hpp"
#include "cfcon/errors.hpp"
#include "cfcon/io.hpp"
#include "cfcon/rng.hpp"

namespace cfcon {

void validate_coloring(const Graph& g, const EdgeColoring& coloring) {
    if (static_cast<int>(coloring.colors.size()) != g.edge_count()) {
        throw InputError("coloring has " + std::to_string(coloring.colors.size()) +
                         " entries for " + std::to_string(g.edge_count()) + " edges");
    }
    for (std::size_t e = 0; e < coloring.colors.size(); ++e) {
        if (coloring.colors[e] < 1 || coloring.colors[e] > coloring.palette_size) {
            throw InputError("edge " + std::to_string(e) + " has color " +
                             std::to_string(coloring.colors[e]) + " outside [1, " +
                             std::to_string(coloring.palette_size) + "]");
        }
    }
}

EdgeColoring read_coloring(std::istream& in, const Graph& g) {
    std::string line;
    std::vector<long long> fields;
    std::size_t line_no = 1;
    auto fail = [&](const std::string& what) -> void {
        throw InputError("line " + std::to_string(line_no) + ": " + what);
    };
    if (!std::getline(in, line)) fail("missing header \"m t\"");
    if (!parse_int_fields(line, fields) || fields.size() != 2) fail("expected header \"m t\"");
    if (fields[0] != g.edge_count()) fail("coloring is for " + std::to_string(fields[0]) + " edges, graph has " + std::to_string(g.edge_count()));
    if (fields[1] < 0 || fields[1] > 1'000'000'000) fail("palette size out of range");
    EdgeColoring out;
    out.palette_size = static_cast<int>(fields[1]);
    out.colors.assign(g.edge_count(), 0);
    for (int read = 0; read < g.edge_count(); ++read) {
        ++line_no;
        if (!std::getline(in, line)) fail("expected " + std::to_string(g.edge_count()) + " color lines");
        if (!parse_int_fields(line, fields) || fields.size() != 2) fail("expected \"edge_id color\"");
        if (fields[0] < 0 || fields[0] >= g.edge_count()) fail("edge id out of range");
        if (out.colors[fields[0]] != 0) fail("edge " + std::to_string(fields[0]) + " colored twice");
        if (fields[1] < 1 || fields[1] > out.palette_size) fail("color outside [1, t]");
        out.colors[fields[0]] = static_cast<int>(fields[1]);
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") != std::string::npos) fail("unexpected content after coloring");
    }
    return out;
}

void write_coloring(std::ostream& out, const EdgeColoring& coloring) {
    std::ostringstream buf;
    buf << coloring.colors.size() << ' ' << coloring.palette_size << '\n';
    for (std::size_t e = 0; e < coloring.colors.size(); ++e) buf << e << ' ' << coloring.colors[e] << '\n';
    out << buf.str();
}

bool has_unique_color(std::span<const int> colors) {
    std::map<int, int> count;
    for (int c : colors) ++count[c];
    return std::any_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 1; });
}

bool is_conflict_free_path(const Graph& g, const EdgeColoring& coloring, std::span<const EdgeId> path) {
    if (path.empty()) throw InputError("empty path");
    for (EdgeId e : path) {
        if (e < 0 || e >= g.edge_count()) throw InputError("edge id out of range");
    }
    // Recover the vertex sequence and check it is simple.
    std::vector<Vertex> vertices;
    if (path.size() == 1) {
        vertices = {g.edge(path[0]).u, g.edge(path[0]).v};
    } else {
        const Edge& first = g.edge(path[0]);
        const Edge& second = g.edge(path[1]);
        Vertex shared;
        if (first.u == second.u || first.u == second.v) {
            shared = first.u;
        } else if (first.v == second.u || first.v == second.v) {
            shared = first.v;
        } else {
            throw InputError("edges 0 and 1 of the path are not adjacent");
        }
        vertices = {first.other(shared), shared};
        for (std::size_t i = 1; i < path.size(); ++i) {
            const Edge& e = g.edge(path[i]);
            if (e.u != vertices.back() && e.v != vertices.back()) {
                throw InputError("edges " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                 " of the path are not consecutive");
            }
            vertices.push_back(e.other(vertices.back()));
        }
    }
    std::vector<Vertex> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("path repeats a vertex");
    }
    std::vector<int> colors;
    colors.reserve(path.size());
    for (EdgeId e : path) colors.push_back(coloring.colors[e]);
    return has_unique_color(colors);
}

bool is_conflict_free_vertex_path(const Graph& g, const EdgeColoring& coloring,
                                  std::span<const Vertex> path) {
    if (path.size() < 2) return false;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> colors;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i] < 0 || path[i] >= g.vertex_count() || seen[path[i]]) return false;
        seen[path[i]] = 1;
        if (i > 0) {
            auto e = g.find_edge(path[i - 1], path[i]);
            if (!e) return false;
            colors.push_back(coloring.colors[*e]);
        }
    }
    return has_unique_color(colors);
}

namespace {

// Unit-capacity flow network on split vertices: x_in = 2x, x_out = 2x + 1.
class TwoPathFlow {
public:
    explicit TwoPathFlow(int nodes) : head_(nodes, -1) {}

    void add_arc(int from, int to) {
        arcs_.push_back({to, 1, head_[from]});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, 0, head_[to]});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    bool augment(int source, int sink) {
        std::vector<int> via(head_.size(), -1);
        std::vector<int> queue{source};
        std::vector<char> seen(head_.size(), 0);
        seen[source] = 1;
        for (std::size_t i = 0; i < queue.size() && !seen[sink]; ++i) {
            for (int a = head_[queue[i]]; a != -1; a = arcs_[a].next) {
                if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = 1;
                    via[arcs_[a].to] = a;
                    queue.push_back(arcs_[a].to);
                }
            }
        }
        if (!seen[sink]) return false;
        for (int x = sink; x != source;) {
            const int a = via[x];
            --arcs_[a].cap;
            ++arcs_[a ^ 1].cap;
            x = arcs_[a ^ 1].to;
        }
        return true;
    }

    // Follows saturated forward arcs from `from` until `sink`.
    std::vector<int> trace(int from, int sink) {
        std::vector<int> nodes{from};
        while (nodes.back() != sink) {
            int step = -1;
            for (int a = head_[nodes.back()]; a != -1; a = arcs_[a].next) {
                if ((a & 1) == 0 && arcs_[a].cap == 0) {
                    step = a;
                    break;
                }
            }
            if (step == -1) throw std::logic_error("flow decomposition failed");
            ++arcs_[step].cap;  // consume so the other trace cannot reuse it
            nodes.push_back(arcs_[step].to);
        }
        return nodes;
    }

private:
    struct Arc {
        int to;
        int cap;
        int next;
    };
    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

std::optional<std::vector<Vertex>> bfs_path(const Graph& g, std::span<const char> allowed,
                                            EdgeId skip_edge, Vertex skip_vertex, Vertex from, Vertex to) {
    std::vector<Vertex> parent(g.vertex_count(), -1);
    std::vector<Vertex> queue{from};
    parent[from] = from;
    for (std::size_t i = 0; i < queue.size() && parent[to] == -1; ++i) {
        for (const Incidence& inc : g.neighbors(queue[i])) {
            if (inc.edge == skip_edge || !allowed[inc.edge]) continue;
            if (inc.neighbor == skip_vertex || parent[inc.neighbor] != -1) continue;
            parent[inc.neighbor] = queue[i];
            queue.push_back(inc.neighbor);
        }
    }
    if (parent[to] == -1) return std::nullopt;
    std::vector<Vertex> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

std::optional<std::vector<Vertex>> path_through_edge(const Graph& g, std::span<const char> allowed,
                                                     EdgeId e, Vertex u, Vertex v) {
    const Vertex a = g.edge(e).u;
    const Vertex b = g.edge(e).v;
    if (u == v) throw InputError("path endpoints must differ");
    if ((u == a && v == b) || (u == b && v == a)) return std::vector<Vertex>{u, v};
    if (v == a || v == b) {
        auto reversed = path_through_edge(g, allowed, e, v, u);
        if (reversed) std::reverse(reversed->begin(), reversed->end());
        return reversed;
    }
    if (u == a || u == b) {
        const Vertex w = g.edge(e).other(u);
        auto rest = bfs_path(g, allowed, e, u, w, v);
        if (!rest) return std::nullopt;
        rest->insert(rest->begin(), u);
        return rest;
    }

    const int n = g.vertex_count();
    const int source = 2 * n;
    const int sink = 2 * n + 1;
    TwoPathFlow flow(2 * n + 2);
    // Arcs added in descending order so adjacency lists are scanned
    // ascending (head insertion reverses them).
    for (EdgeId id = g.edge_count() - 1; id >= 0; --id) {
        if (id == e || !allowed[id]) continue;
        const Edge& ed = g.edge(id);
        flow.add_arc(2 * ed.v + 1, 2 * ed.u);
        flow.add_arc(2 * ed.u + 1, 2 * ed.v);
    }
    for (Vertex x = n - 1; x >= 0; --x) flow.add_arc(2 * x, 2 * x + 1);
    flow.add_arc(2 * b + 1, sink);
    flow.add_arc(2 * a + 1, sink);
    flow.add_arc(source, 2 * v);
    flow.add_arc(source, 2 * u);
    if (!flow.augment(source, sink) || !flow.augment(source, sink)) return std::nullopt;

    auto to_vertices = [](const std::vector<int>& nodes) {
        std::vector<Vertex> out;
        for (std::size_t i = 0; i + 1 < nodes.size(); i += 2) out.push_back(nodes[i] / 2);
        return out;
    };
    // trace() starts at x_in and steps in -> out -> in ...; drop the sink.
    auto from_u = flow.trace(2 * u, sink);
    auto from_v = flow.trace(2 * v, sink);
    from_u.pop_back();
    from_v.pop_back();
    std::vector<Vertex> first = to_vertices(from_u);
    std::vector<Vertex> second = to_vertices(from_v);
    first.insert(first.end(), second.rbegin(), second.rend());
    return first;
}

namespace {

// Color classes ordered by size, then color; each class's edges ascending.
std::vector<std::vector<EdgeId>> classes_by_size(const EdgeColoring& coloring) {
    std::map<int, std::vector<EdgeId>> by_color;
    for (EdgeId e = 0; e < static_cast<EdgeId>(coloring.colors.size()); ++e) {
        by_color[coloring.colors[e]].push_back(e);
    }
    std::vector<std::vector<EdgeId>> out;
    for (auto& [color, edges] : by_color) out.push_back(std::move(edges));
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& x, const auto& y) { return x.size() < y.size(); });
    return out;
}

// H_e: the graph without the other edges of e's color class.
void mask_for(std::vector<char>& mask, std::span<const EdgeId> color_class, EdgeId keep) {
    std::fill(mask.begin(), mask.end(), 1);
    for (EdgeId f : color_class) mask[f] = (f == keep);
}

// For edge e inside graph H (given by mask): attach[x] is the vertex of e's
// block B where x's branch meets B, or -1 if x cannot reach B. A simple x-y
// path through e exists iff attach[x] and attach[y] are distinct and set:
// a simple path crosses exactly the blocks on its block-cut-tree route, and
// inside a 2-connected block any two vertices are joined by a path through
// any given edge.
void attachments(const Graph& g, std::span<const char> mask, const BlockDecomposition& blocks,
                 EdgeId e, std::vector<Vertex>& attach, std::vector<Vertex>& queue) {
    const int block = blocks.edge_block[e];
    std::fill(attach.begin(), attach.end(), -1);
    queue.clear();
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
        if (blocks.edge_block[f] != block) continue;
        for (Vertex x : {g.edge(f).u, g.edge(f).v}) {
            if (attach[x] == -1) {
                attach[x] = x;
                queue.push_back(x);
            }
        }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const Vertex x = queue[i];
        for (const Incidence& inc : g.neighbors(x)) {
            if (!mask[inc.edge] || blocks.edge_block[inc.edge] == block) continue;
            if (attach[inc.neighbor] == -1) {
                attach[inc.neighbor] = attach[x];
                queue.push_back(inc.neighbor);
            }
        }
    }
}

struct PairScan {
    std::vector<std::uint64_t> unresolved;  // packed (u << 32 | v), ascending
    std::vector<EdgeId> certifying;         // per pair index u*n+v, only if tracked; -2 = direct
};

std::uint64_t pack(Vertex u, Vertex v) {
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

// Resolves every pair it can, edge by edge. Leaves refuted pairs in
// `unresolved`. The pair list is built during the first edge's pass so that
// pairs settled immediately are never stored.
PairScan scan_pairs(const Graph& g, const EdgeColoring& coloring, bool track) {
    const int n = g.vertex_count();
    PairScan scan;
    if (track) scan.certifying.assign(static_cast<std::size_t>(n) * n, -1);
    std::vector<Vertex> attach(n, -1), queue;
    std::vector<int> stamp(n, -1);

    bool listed = false;
    auto first_pass = [&](std::optional<EdgeId> e) {
        for (Vertex u = 0; u < n; ++u) {
            for (const Incidence& inc : g.neighbors(u)) stamp[inc.neighbor] = u;
            for (Vertex v = u + 1; v < n; ++v) {
                const std::size_t slot = static_cast<std::size_t>(u) * n + v;
                if (stamp[v] == u) {
                    if (track) scan.certifying[slot] = -2;
                } else if (e && attach[u] != -1 && attach[v] != -1 && attach[u] != attach[v]) {
                    if (track) scan.certifying[slot] = *e;
                } else {
                    scan.unresolved.push_back(pack(u, v));
                }
            }
        }
        listed = true;
    };

    const auto classes = classes_by_size(coloring);
    std::vector<char> mask(g.edge_count(), 1);
    std::optional<BlockDecomposition> whole;
    for (const auto& color_class : classes) {
        for (EdgeId e : color_class) {
            BlockDecomposition local;
            const BlockDecomposition* blocks;
            if (color_class.size() == 1) {
                if (!whole) whole = decompose_blocks(g);
                std::fill(mask.begin(), mask.end(), 1);
                blocks = &*whole;
            } else {
                mask_for(mask, color_class, e);
                local = decompose_blocks(g, mask);
                blocks = &local;
            }
            attachments(g, mask, *blocks, e, attach, queue);
            if (!listed) {
                first_pass(e);
            } else {
                std::size_t keep = 0;
                for (std::uint64_t pair : scan.unresolved) {
                    const Vertex u = static_cast<Vertex>(pair >> 32);
                    const Vertex v = static_cast<Vertex>(pair & 0xffffffffu);
                    if (attach[u] != -1 && attach[v] != -1 && attach[u] != attach[v]) {
                        if (track) scan.certifying[static_cast<std::size_t>(u) * n + v] = e;
                    } else {
                        scan.unresolved[keep++] = pair;
                    }
                }
                scan.unresolved.resize(keep);
            }
            if (scan.unresolved.empty()) return scan;
        }
    }
    if (!listed) first_pass(std::nullopt);
    return scan;
}

std::vector<Vertex> witness_via(const Graph& g, const EdgeColoring& coloring, EdgeId e, Vertex u, Vertex v) {
    std::vector<char> mask(g.edge_count(), 1);
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
        if (f != e && coloring.colors[f] == coloring.colors[e]) mask[f] = 0;
    }
    auto path = path_through_edge(g, mask, e, u, v);
    if (!path) throw std::logic_error("pair scan and path search disagree");
    return *path;
}

}  // namespace

std::optional<std::vector<Vertex>> find_conflict_free_path(const Graph& g, const EdgeColoring& coloring,
                                                           Vertex u, Vertex v) {
    validate_coloring(g, coloring);
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count()) {
        throw InputError("vertex out of range");
    }
    if (u == v) throw InputError("endpoints of a conflict-free path must differ");
    if (g.adjacent(u, v)) return std::vector<Vertex>{u, v};

    std::vector<char> mask(g.edge_count(), 1);
    for (const auto& color_class : classes_by_size(coloring)) {
        // Cheap necessary condition: u and v reach the class's edges at all.
        std::fill(mask.begin(), mask.end(), 1);
        for (EdgeId f : color_class) mask[f] = 0;
        const auto comp = component_labels(g, mask);
        for (EdgeId e : color_class) {
            const Vertex a = g.edge(e).u;
            const Vertex b = g.edge(e).v;
            const bool straight = comp[u] == comp[a] && comp[v] == comp[b];
            const bool crossed = comp[u] == comp[b] && comp[v] == comp[a];
            if (!straight && !crossed) continue;
            mask[e] = 1;
            auto path = path_through_edge(g, mask, e, u, v);
            mask[e] = 0;
            if (path) return path;
        }
    }
    return std::nullopt;
}

CfcCertificate is_conflict_free_connected(const Graph& g, const EdgeColoring& coloring,
                                          const CertifyOptions& opts) {
    validate_coloring(g, coloring);
    if (!is_connected(g)) throw InputError("conflict-free connectivity needs a connected graph");
    const int n = g.vertex_count();
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    const bool full = n <= opts.full_witness_limit;

    PairScan scan = scan_pairs(g, coloring, full);
    CfcCertificate cert;
    cert.witness_count = pairs - static_cast<long long>(scan.unresolved.size());
    if (!scan.unresolved.empty()) {
        cert.status = CfcCertificate::Status::refuted;
        const std::uint64_t first = scan.unresolved.front();
        cert.failing_pair = std::make_pair(static_cast<Vertex>(first >> 32),
                                           static_cast<Vertex>(first & 0xffffffffu));
    } else {
        cert.status = CfcCertificate::Status::certified;
    }

    auto add_witness = [&](Vertex u, Vertex v, std::vector<Vertex> path) {
        if (!is_conflict_free_vertex_path(g, coloring, path) || path.front() != u || path.back() != v) {
            throw std::logic_error("witness failed re-validation");
        }
        cert.witnesses.push_back({u, v, std::move(path)});
    };

    if (full) {
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                const EdgeId e = scan.certifying[static_cast<std::size_t>(u) * n + v];
                if (e == -1) continue;
                add_witness(u, v, e == -2 ? std::vector<Vertex>{u, v} : witness_via(g, coloring, e, u, v));
            }
        }
        cert.complete_witnesses = cert.certified();
    } else if (cert.certified()) {
        Rng rng(opts.seed);
        for (int i = 0; i < opts.sampled_witnesses; ++i) {
            Vertex u = static_cast<Vertex>(rng.below(n));
            Vertex v = static_cast<Vertex>(rng.below(n - 1));
            if (v >= u) ++v;
            if (u > v) std::swap(u, v);
            auto path = find_conflict_free_path(g, coloring, u, v);
            if (!path) throw std::logic_error("pair scan and path search disagree");
            add_witness(u, v, std::move(*path));
        }
    }
    return cert;
}

bool conflict_free_connected(const Graph& g, const EdgeColoring& coloring) {
    return scan_pairs(g, coloring, false).unresolved.empty();
}

}  // namespace cfcon
