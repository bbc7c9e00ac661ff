// campaign-forensics: weighted undirected graphs and greedy modularity
// optimization with a resolution parameter.
// SPDX-License-Identifier: MIT
//
// The optimizer follows the classic two-phase greedy scheme (local moving
// followed by community aggregation, repeated until no move improves
// modularity).  Modularity at resolution γ:
//     Q = Σ_c [ in_c / (2m) − γ · (tot_c / (2m))² ]
// with in_c twice the internal weight of community c, tot_c the summed node
// strengths, and 2m the total strength.  γ = 1 is the standard definition;
// larger γ favors smaller communities.
#pragma once

#include <cstdint>
#include <vector>

#include "cfx/graph/digraph.hpp"
#include "cfx/util/rng.hpp"

namespace cfx {

/// Symmetric weighted graph in CSR form.  Every undirected edge {u,v}, u≠v,
/// appears in both adjacency rows; self-loops appear once in their row and
/// count twice toward the node strength.
struct UndirectedGraph {
    std::vector<std::uint64_t> offsets{0};
    std::vector<std::uint32_t> neighbors;
    std::vector<double> weights;
    std::vector<double> loop;      ///< self-loop weight per node (usually 0)
    std::vector<double> strength;  ///< Σ incident weights, loops twice
    double two_m = 0.0;            ///< Σ strengths = twice the total edge weight
    /// Original digraph node behind each vertex (identity unless subgraphed).
    std::vector<std::uint32_t> orig_node;

    std::uint32_t num_nodes() const { return static_cast<std::uint32_t>(loop.size()); }

    /// Symmetrized projection: w{u,v} = w(u→v) + w(v→u).
    static UndirectedGraph from_digraph(const Digraph& g);
    /// Direct construction from undirected edges (u, v, w); duplicates sum.
    static UndirectedGraph from_edges(std::uint32_t num_nodes,
                                      std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> edges);
};

/// Vertices of the largest connected component (smallest vertex first).
std::vector<std::uint32_t> largest_component_nodes(const UndirectedGraph& g);

/// Induced subgraph on `nodes` (orig_node composes through).
UndirectedGraph induced_subgraph(const UndirectedGraph& g, const std::vector<std::uint32_t>& nodes);

/// One greedy optimization run; the node visiting order is a seeded shuffle,
/// making runs reproducible and independently randomizable.
struct LouvainResult {
    std::vector<std::uint32_t> assignment;  ///< community id per node, dense from 0
    double modularity = 0.0;
};
LouvainResult louvain(const UndirectedGraph& g, double resolution, Rng& rng);

/// Modularity of an arbitrary assignment at resolution γ.
double modularity(const UndirectedGraph& g, const std::vector<std::uint32_t>& assignment,
                  double resolution);

/// Chance-adjusted pair-counting agreement between two partitions ∈ [−1, 1].
double adjusted_rand_index(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b);

/// Relabel community ids densely, ordered by decreasing community size
/// (ties by smallest member vertex).
void relabel_by_size(std::vector<std::uint32_t>& assignment);

}  // namespace cfx
