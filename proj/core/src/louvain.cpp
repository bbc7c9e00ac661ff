// campaign-forensics: greedy modularity optimization (local moving + aggregation).
// SPDX-License-Identifier: MIT
#include "cfx/analysis/louvain.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "cfx/util/error.hpp"

namespace cfx {

UndirectedGraph UndirectedGraph::from_digraph(const Digraph& g) {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> edges;
    edges.reserve(g.num_edges());
    for (std::uint32_t s = 0; s < g.num_nodes(); ++s) {
        const auto span = g.out_edges(s);
        for (std::size_t k = 0; k < span.size(); ++k) {
            const std::uint32_t d = span.nodes_begin[k];
            const double w = span.weights ? static_cast<double>(span.weights[k]) : 1.0;
            edges.emplace_back(s, d, w);  // both directions merge below
        }
    }
    return from_edges(g.num_nodes(), std::move(edges));
}

UndirectedGraph UndirectedGraph::from_edges(
    std::uint32_t num_nodes, std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> edges) {
    // Canonicalize each pair to (min, max) so u→v and v→u weights merge.
    for (auto& [u, v, w] : edges) {
        if (u >= num_nodes || v >= num_nodes)
            throw ValidationError("undirected edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        return std::get<1>(a) < std::get<1>(b);
    });

    UndirectedGraph g;
    g.loop.assign(num_nodes, 0.0);
    g.strength.assign(num_nodes, 0.0);
    g.orig_node.resize(num_nodes);
    std::iota(g.orig_node.begin(), g.orig_node.end(), 0u);

    // Collapse duplicates, splitting loops from proper edges.
    std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> merged;
    merged.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size();) {
        std::size_t j = i;
        double w = 0.0;
        while (j < edges.size() && std::get<0>(edges[j]) == std::get<0>(edges[i]) &&
               std::get<1>(edges[j]) == std::get<1>(edges[i])) {
            w += std::get<2>(edges[j]);
            ++j;
        }
        const std::uint32_t u = std::get<0>(edges[i]);
        const std::uint32_t v = std::get<1>(edges[i]);
        if (u == v)
            g.loop[u] += w;
        else
            merged.emplace_back(u, v, w);
        i = j;
    }

    g.offsets.assign(num_nodes + 1, 0);
    for (const auto& [u, v, w] : merged) {
        ++g.offsets[u + 1];
        ++g.offsets[v + 1];
    }
    std::partial_sum(g.offsets.begin(), g.offsets.end(), g.offsets.begin());
    g.neighbors.resize(g.offsets[num_nodes]);
    g.weights.resize(g.offsets[num_nodes]);
    std::vector<std::uint64_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
    for (const auto& [u, v, w] : merged) {
        g.neighbors[cursor[u]] = v;
        g.weights[cursor[u]] = w;
        ++cursor[u];
        g.neighbors[cursor[v]] = u;
        g.weights[cursor[v]] = w;
        ++cursor[v];
    }

    for (std::uint32_t u = 0; u < num_nodes; ++u) {
        double s = 2.0 * g.loop[u];
        for (std::uint64_t k = g.offsets[u]; k < g.offsets[u + 1]; ++k) s += g.weights[k];
        g.strength[u] = s;
        g.two_m += s;
    }
    return g;
}

std::vector<std::uint32_t> largest_component_nodes(const UndirectedGraph& g) {
    const std::uint32_t n = g.num_nodes();
    std::vector<std::uint32_t> component(n, Digraph::npos);
    std::vector<std::uint32_t> queue;
    std::uint32_t best_root = 0;
    std::size_t best_size = 0;
    std::uint32_t comp = 0;
    for (std::uint32_t start = 0; start < n; ++start) {
        if (component[start] != Digraph::npos) continue;
        queue.assign(1, start);
        component[start] = comp;
        std::size_t size = 0;
        while (!queue.empty()) {
            const std::uint32_t u = queue.back();
            queue.pop_back();
            ++size;
            for (std::uint64_t k = g.offsets[u]; k < g.offsets[u + 1]; ++k) {
                const std::uint32_t v = g.neighbors[k];
                if (component[v] == Digraph::npos) {
                    component[v] = comp;
                    queue.push_back(v);
                }
            }
        }
        if (size > best_size) {
            best_size = size;
            best_root = comp;
        }
        ++comp;
    }
    std::vector<std::uint32_t> nodes;
    nodes.reserve(best_size);
    for (std::uint32_t u = 0; u < n; ++u)
        if (component[u] == best_root) nodes.push_back(u);
    return nodes;
}

UndirectedGraph induced_subgraph(const UndirectedGraph& g,
                                 const std::vector<std::uint32_t>& nodes) {
    std::vector<std::uint32_t> dense(g.num_nodes(), Digraph::npos);
    for (std::uint32_t i = 0; i < nodes.size(); ++i) dense[nodes[i]] = i;

    std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> edges;
    for (std::uint32_t i = 0; i < nodes.size(); ++i) {
        const std::uint32_t u = nodes[i];
        for (std::uint64_t k = g.offsets[u]; k < g.offsets[u + 1]; ++k) {
            const std::uint32_t v = g.neighbors[k];
            if (u < v && dense[v] != Digraph::npos)
                edges.emplace_back(i, dense[v], g.weights[k]);
        }
        if (g.loop[u] != 0.0) edges.emplace_back(i, i, g.loop[u]);
    }
    UndirectedGraph sub = UndirectedGraph::from_edges(static_cast<std::uint32_t>(nodes.size()),
                                                      std::move(edges));
    for (std::uint32_t i = 0; i < nodes.size(); ++i) sub.orig_node[i] = g.orig_node[nodes[i]];
    return sub;
}

namespace {

/// One local-moving + aggregation level.  Returns the node→community map of
/// this level and the aggregated graph; `moved` reports whether any node
/// changed community.
struct Level {
    std::vector<std::uint32_t> assignment;
    UndirectedGraph aggregated;
    bool moved = false;
};

Level one_level(const UndirectedGraph& g, double resolution, Rng& rng) {
    const std::uint32_t n = g.num_nodes();
    const double m = g.two_m / 2.0;
    Level level;
    level.assignment.resize(n);
    std::iota(level.assignment.begin(), level.assignment.end(), 0u);
    std::vector<double> tot = g.strength;  // per community

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    rng.shuffle(order);

    // Scratch: community → accumulated edge weight from the current node.
    std::vector<double> k_to(n, 0.0);
    std::vector<std::uint32_t> touched;

    bool improved_any = false;
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::uint32_t u : order) {
            const std::uint32_t old_c = level.assignment[u];
            touched.clear();
            for (std::uint64_t k = g.offsets[u]; k < g.offsets[u + 1]; ++k) {
                const std::uint32_t c = level.assignment[g.neighbors[k]];
                if (k_to[c] == 0.0) touched.push_back(c);
                k_to[c] += g.weights[k];
            }
            if (k_to[old_c] == 0.0) touched.push_back(old_c);  // baseline must be evaluable

            tot[old_c] -= g.strength[u];

            // Gain of joining community c (up to a constant shared by all c):
            //   Δ(c) = k_{u→c}/m − γ·s_u·tot_c/(2m²)
            // Moves happen only on strict improvement, which guarantees
            // termination; the scan order over `touched` is deterministic.
            const double scale = resolution * g.strength[u] / (2.0 * m * m);
            std::uint32_t best_c = old_c;
            double best_gain = k_to[old_c] / m - scale * tot[old_c];
            for (std::uint32_t c : touched) {
                const double gain = k_to[c] / m - scale * tot[c];
                if (gain > best_gain + 1e-12) {
                    best_gain = gain;
                    best_c = c;
                }
            }
            tot[best_c] += g.strength[u];
            if (best_c != old_c) {
                level.assignment[u] = best_c;
                improved = true;
                improved_any = true;
            }
            for (std::uint32_t c : touched) k_to[c] = 0.0;
        }
    }
    level.moved = improved_any;

    // Dense community ids.
    std::vector<std::uint32_t> remap(n, Digraph::npos);
    std::uint32_t next = 0;
    for (std::uint32_t u = 0; u < n; ++u) {
        std::uint32_t& id = remap[level.assignment[u]];
        if (id == Digraph::npos) id = next++;
        level.assignment[u] = id;
    }

    // Aggregate: communities become nodes; internal weight becomes a loop.
    std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> edges;
    edges.reserve(g.neighbors.size() / 2 + n);
    for (std::uint32_t u = 0; u < n; ++u) {
        const std::uint32_t cu = level.assignment[u];
        if (g.loop[u] != 0.0) edges.emplace_back(cu, cu, g.loop[u]);
        for (std::uint64_t k = g.offsets[u]; k < g.offsets[u + 1]; ++k) {
            const std::uint32_t v = g.neighbors[k];
            if (v < u) continue;  // each undirected edge once
            edges.emplace_back(cu, level.assignment[v], g.weights[k]);
        }
    }
    level.aggregated = UndirectedGraph::from_edges(next, std::move(edges));
    return level;
}

}  // namespace

double modularity(const UndirectedGraph& g, const std::vector<std::uint32_t>& assignment,
                  double resolution) {
    if (assignment.size() != g.num_nodes())
        throw ValidationError("assignment does not match the graph");
    std::uint32_t num_comms = 0;
    for (std::uint32_t c : assignment) num_comms = std::max(num_comms, c + 1);
    std::vector<double> in(num_comms, 0.0);
    std::vector<double> tot(num_comms, 0.0);
    for (std::uint32_t u = 0; u < g.num_nodes(); ++u) {
        const std::uint32_t cu = assignment[u];
        tot[cu] += g.strength[u];
        in[cu] += 2.0 * g.loop[u];
        for (std::uint64_t k = g.offsets[u]; k < g.offsets[u + 1]; ++k)
            if (assignment[g.neighbors[k]] == cu) in[cu] += g.weights[k];
    }
    const double two_m = g.two_m;
    if (two_m <= 0.0) return 0.0;
    double q = 0.0;
    for (std::uint32_t c = 0; c < num_comms; ++c)
        q += in[c] / two_m - resolution * (tot[c] / two_m) * (tot[c] / two_m);
    return q;
}

LouvainResult louvain(const UndirectedGraph& g, double resolution, Rng& rng) {
    if (g.num_nodes() == 0) throw ValidationError("community detection on an empty graph");

    LouvainResult result;
    result.assignment.resize(g.num_nodes());
    std::iota(result.assignment.begin(), result.assignment.end(), 0u);

    UndirectedGraph current = g;
    while (true) {
        Level level = one_level(current, resolution, rng);
        if (!level.moved) break;
        for (std::uint32_t u = 0; u < result.assignment.size(); ++u)
            result.assignment[u] = level.assignment[result.assignment[u]];
        current = std::move(level.aggregated);
        if (current.num_nodes() <= 1) break;
    }
    relabel_by_size(result.assignment);
    result.modularity = modularity(g, result.assignment, resolution);
    return result;
}

double adjusted_rand_index(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) throw ValidationError("partitions differ in length");
    const std::size_t n = a.size();
    if (n < 2) return 1.0;

    const auto choose2 = [](double x) { return x * (x - 1.0) / 2.0; };

    std::unordered_map<std::uint64_t, std::uint64_t> joint;
    std::unordered_map<std::uint32_t, std::uint64_t> ra, rb;
    for (std::size_t i = 0; i < n; ++i) {
        ++joint[(static_cast<std::uint64_t>(a[i]) << 32) | b[i]];
        ++ra[a[i]];
        ++rb[b[i]];
    }
    double sum_joint = 0.0, sum_a = 0.0, sum_b = 0.0;
    for (const auto& [k, c] : joint) sum_joint += choose2(static_cast<double>(c));
    for (const auto& [k, c] : ra) sum_a += choose2(static_cast<double>(c));
    for (const auto& [k, c] : rb) sum_b += choose2(static_cast<double>(c));
    const double total = choose2(static_cast<double>(n));
    const double expected = sum_a * sum_b / total;
    const double max_index = 0.5 * (sum_a + sum_b);
    if (max_index == expected) return 1.0;  // both partitions trivial
    return (sum_joint - expected) / (max_index - expected);
}

void relabel_by_size(std::vector<std::uint32_t>& assignment) {
    std::uint32_t num_comms = 0;
    for (std::uint32_t c : assignment) num_comms = std::max(num_comms, c + 1);
    std::vector<std::uint64_t> size(num_comms, 0);
    std::vector<std::uint32_t> first(num_comms, Digraph::npos);
    for (std::uint32_t u = 0; u < assignment.size(); ++u) {
        ++size[assignment[u]];
        if (first[assignment[u]] == Digraph::npos) first[assignment[u]] = u;
    }
    std::vector<std::uint32_t> order(num_comms);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
        if (size[x] != size[y]) return size[x] > size[y];
        return first[x] < first[y];
    });
    std::vector<std::uint32_t> remap(num_comms);
    for (std::uint32_t rank = 0; rank < num_comms; ++rank) remap[order[rank]] = rank;
    for (std::uint32_t& c : assignment) c = remap[c];
}

}  // namespace cfx
