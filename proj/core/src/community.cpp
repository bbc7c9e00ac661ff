// campaign-forensics: resolution sweep, stability selection, and profiles.
// SPDX-License-Identifier: MIT
#include "cfx/analysis/community.hpp"

#include <algorithm>
#include <cmath>

#include "cfx/util/error.hpp"

namespace cfx {

std::vector<double> resolution_grid(double lo, double hi, int points) {
    if (lo <= 0.0 || hi < lo || points < 1)
        throw ValidationError("invalid resolution grid parameters");
    std::vector<double> grid;
    grid.reserve(points);
    if (points == 1) {
        grid.push_back(lo);
        return grid;
    }
    const double ratio = hi / lo;
    for (int k = 0; k < points; ++k)
        grid.push_back(lo * std::pow(ratio, static_cast<double>(k) / (points - 1)));
    return grid;
}

std::vector<Partition> detect(const UndirectedGraph& graph, const std::vector<double>& resolutions,
                              int runs, std::uint64_t seed) {
    if (graph.num_nodes() == 0) throw ValidationError("community detection on an empty graph");
    if (runs < 1) throw ValidationError("runs_per_resolution must be at least 1");

    std::vector<Partition> out;
    out.reserve(resolutions.size());
    for (std::size_t ri = 0; ri < resolutions.size(); ++ri) {
        const double resolution = resolutions[ri];
        std::vector<LouvainResult> results;
        results.reserve(runs);
        for (int run = 0; run < runs; ++run) {
            Rng rng = Rng::derive(seed, (static_cast<std::uint64_t>(ri) << 20) |
                                            static_cast<std::uint64_t>(run));
            results.push_back(louvain(graph, resolution, rng));
        }

        int best = 0;
        for (int run = 1; run < runs; ++run)
            if (results[run].modularity > results[best].modularity) best = run;

        double stability = 1.0;
        if (runs > 1) {
            double sum = 0.0;
            std::size_t pairs = 0;
            for (int a = 0; a < runs; ++a)
                for (int b = a + 1; b < runs; ++b) {
                    sum += adjusted_rand_index(results[a].assignment, results[b].assignment);
                    ++pairs;
                }
            stability = sum / static_cast<double>(pairs);
        }

        Partition p;
        p.assignment = std::move(results[best].assignment);
        p.resolution = resolution;
        p.modularity = results[best].modularity;
        p.stability = stability;
        out.push_back(std::move(p));
    }
    return out;
}

const Partition& select_partition(const std::vector<Partition>& partitions) {
    if (partitions.empty()) throw ValidationError("no partitions to select from");
    const Partition* best = &partitions.front();
    for (const Partition& p : partitions) {
        if (p.stability > best->stability ||
            (p.stability == best->stability && p.modularity > best->modularity) ||
            (p.stability == best->stability && p.modularity == best->modularity &&
             p.resolution < best->resolution)) {
            best = &p;
        }
    }
    return *best;
}

std::vector<CommunityProfile> profile_communities(const Partition& partition,
                                                  const UndirectedGraph& lcc,
                                                  const Digraph& source_graph,
                                                  const Classification& classes,
                                                  double min_share) {
    if (partition.assignment.size() != lcc.num_nodes())
        throw ValidationError("partition does not match the component graph");

    const std::size_t n = lcc.num_nodes();
    std::uint32_t num_comms = 0;
    for (std::uint32_t c : partition.assignment) num_comms = std::max(num_comms, c + 1);
    std::vector<std::size_t> sizes(num_comms, 0);
    for (std::uint32_t c : partition.assignment) ++sizes[c];

    // Community of each source-graph node (npos = outside the LCC).
    std::vector<std::uint32_t> comm_of_node(source_graph.num_nodes(), Digraph::npos);
    for (std::uint32_t v = 0; v < n; ++v)
        comm_of_node[lcc.orig_node[v]] = partition.assignment[v];

    constexpr int kStatusBuckets = kAccountStatusCount + 1;  // + unknown
    const auto status_bucket = [&](std::uint32_t node) {
        const std::uint8_t s = source_graph.node_status()[node];
        return s < kAccountStatusCount ? static_cast<int>(s) : kAccountStatusCount;
    };

    std::vector<CommunityProfile> profiles;
    for (std::uint32_t c = 0; c < num_comms; ++c) {
        if (static_cast<double>(sizes[c]) < min_share * static_cast<double>(n)) continue;

        CommunityProfile prof;
        prof.community = c;
        prof.nodes = sizes[c];
        prof.flow_percent.assign(kStatusBuckets * kStatusBuckets, 0.0);

        std::array<std::size_t, kSupportClassCount> class_counts{};
        std::array<std::size_t, kAccountStatusCount> status_counts{};
        std::size_t unknown_status = 0;
        std::size_t classified = 0;

        for (std::uint32_t v = 0; v < n; ++v) {
            if (partition.assignment[v] != c) continue;
            const std::uint32_t node = lcc.orig_node[v];
            const std::uint8_t status = source_graph.node_status()[node];
            if (status < kAccountStatusCount) {
                ++status_counts[status];
                if (status == static_cast<std::uint8_t>(AccountStatus::ira)) ++prof.ira_nodes;
            } else {
                ++unknown_status;
            }
            const std::uint32_t user = source_graph.user_of(node);
            if (user < classes.klass.size() && classes.included[user]) {
                ++class_counts[classes.klass[user]];
                ++classified;
            }
        }

        if (classified > 0)
            for (int k = 0; k < kSupportClassCount; ++k)
                prof.class_percent[k] = 100.0 * static_cast<double>(class_counts[k]) /
                                        static_cast<double>(classified);
        prof.unclassified = prof.nodes - classified;
        for (int s = 0; s < kAccountStatusCount; ++s)
            prof.status_percent[s] =
                100.0 * static_cast<double>(status_counts[s]) / static_cast<double>(prof.nodes);
        prof.unknown_status_percent =
            100.0 * static_cast<double>(unknown_status) / static_cast<double>(prof.nodes);

        // Directed interaction flow between status groups inside the
        // community, measured on the original directed graph.
        double total_weight = 0.0;
        for (std::uint32_t s = 0; s < source_graph.num_nodes(); ++s) {
            if (comm_of_node[s] != c) continue;
            const auto span = source_graph.out_edges(s);
            for (std::size_t k = 0; k < span.size(); ++k) {
                const std::uint32_t d = span.nodes_begin[k];
                if (comm_of_node[d] != c) continue;
                const double w = span.weights ? static_cast<double>(span.weights[k]) : 1.0;
                prof.flow_percent[status_bucket(s) * kStatusBuckets + status_bucket(d)] += w;
                total_weight += w;
            }
        }
        if (total_weight > 0.0)
            for (double& cell : prof.flow_percent) cell = 100.0 * cell / total_weight;

        profiles.push_back(std::move(prof));
    }
    return profiles;
}

}  // namespace cfx
