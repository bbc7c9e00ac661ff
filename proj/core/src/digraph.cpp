// campaign-forensics: CSR digraph construction with canonical node order.
// SPDX-License-Identifier: MIT
#include "cfx/graph/digraph.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "cfx/util/error.hpp"

namespace cfx {

namespace {

/// Sort edges by (src, dst) and collapse duplicates, summing weights.
void aggregate_edges(std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>& edges) {
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        return std::get<1>(a) < std::get<1>(b);
    });
    std::size_t w = 0;
    for (std::size_t r = 0; r < edges.size();) {
        std::size_t r2 = r;
        std::uint64_t weight = 0;
        while (r2 < edges.size() && std::get<0>(edges[r2]) == std::get<0>(edges[r]) &&
               std::get<1>(edges[r2]) == std::get<1>(edges[r])) {
            weight += std::get<2>(edges[r2]);
            ++r2;
        }
        edges[w++] = {std::get<0>(edges[r]), std::get<1>(edges[r]),
                      static_cast<std::uint32_t>(std::min<std::uint64_t>(weight, 0xffffffffu))};
        r = r2;
    }
    edges.resize(w);
}

}  // namespace

Digraph Digraph::from_user_edges(
    const StringInterner& users,
    std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> edges, bool weighted,
    GraphKind kind, std::string label) {
    Digraph g;
    g.weighted_ = weighted;
    g.kind_ = kind;
    g.label_ = std::move(label);
    g.users_ = &users;

    // Nodes are exactly the edge endpoints, ordered by user-id string so the
    // graph is independent of corpus row order and interner assignment.
    std::vector<std::uint32_t> endpoints;
    endpoints.reserve(edges.size() * 2);
    for (const auto& [s, d, w] : edges) {
        endpoints.push_back(s);
        endpoints.push_back(d);
    }
    std::sort(endpoints.begin(), endpoints.end());
    endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());
    std::sort(endpoints.begin(), endpoints.end(),
              [&users](std::uint32_t a, std::uint32_t b) { return users.str(a) < users.str(b); });
    g.node_user_ = std::move(endpoints);

    // Inverse map as a user-id-sorted list of node indices (binary search).
    g.user_sorted_nodes_.resize(g.node_user_.size());
    std::iota(g.user_sorted_nodes_.begin(), g.user_sorted_nodes_.end(), 0u);
    std::sort(g.user_sorted_nodes_.begin(), g.user_sorted_nodes_.end(),
              [&g](std::uint32_t a, std::uint32_t b) { return g.node_user_[a] < g.node_user_[b]; });

    // Remap edge endpoints to dense node indices, then build both CSRs.
    for (auto& [s, d, w] : edges) {
        s = g.node_of_user(s);
        d = g.node_of_user(d);
    }
    g.build_csr(edges);
    return g;
}

Digraph Digraph::from_index_edges(
    std::uint32_t num_nodes,
    const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>& edges,
    bool weighted, GraphKind kind, std::string label) {
    Digraph g;
    g.weighted_ = weighted;
    g.kind_ = kind;
    g.label_ = std::move(label);
    g.node_user_.resize(num_nodes);
    std::iota(g.node_user_.begin(), g.node_user_.end(), 0u);
    g.user_sorted_nodes_ = g.node_user_;

    auto copy = edges;
    for (const auto& [s, d, w] : copy) {
        if (s >= num_nodes || d >= num_nodes)
            throw ValidationError("graph edge endpoint out of range");
    }
    g.build_csr(copy);
    return g;
}

void Digraph::build_csr(std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>& edges) {
    aggregate_edges(edges);
    const std::uint32_t n = num_nodes();
    const std::size_t m = edges.size();

    node_status_.assign(n, 0xff);

    out_offsets_.assign(n + 1, 0);
    out_targets_.resize(m);
    if (weighted_) out_weights_.resize(m);
    for (const auto& [s, d, w] : edges) ++out_offsets_[s + 1];
    std::partial_sum(out_offsets_.begin(), out_offsets_.end(), out_offsets_.begin());
    {
        std::vector<std::uint64_t> cursor(out_offsets_.begin(), out_offsets_.end() - 1);
        for (const auto& [s, d, w] : edges) {
            const std::uint64_t at = cursor[s]++;
            out_targets_[at] = d;
            if (weighted_) out_weights_[at] = w;
        }
    }

    in_offsets_.assign(n + 1, 0);
    in_sources_.resize(m);
    if (weighted_) in_weights_.resize(m);
    for (const auto& [s, d, w] : edges) ++in_offsets_[d + 1];
    std::partial_sum(in_offsets_.begin(), in_offsets_.end(), in_offsets_.begin());
    {
        std::vector<std::uint64_t> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
        // Edges arrive sorted by (src, dst), so each in-row fills in
        // ascending source order — rows stay sorted for binary search.
        for (const auto& [s, d, w] : edges) {
            const std::uint64_t at = cursor[d]++;
            in_sources_[at] = s;
            if (weighted_) in_weights_[at] = w;
        }
    }
}

std::string Digraph::user_str(std::uint32_t node) const {
    if (users_ != nullptr) return std::string(users_->str(node_user_[node]));
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%u", node_user_[node]);
    return buf;
}

std::uint32_t Digraph::node_of_user(std::uint32_t user) const {
    auto it = std::lower_bound(user_sorted_nodes_.begin(), user_sorted_nodes_.end(), user,
                               [this](std::uint32_t node, std::uint32_t u) { return node_user_[node] < u; });
    if (it == user_sorted_nodes_.end() || node_user_[*it] != user) return npos;
    return *it;
}

std::uint64_t Digraph::out_strength(std::uint32_t node) const {
    if (!weighted_) return out_degree(node);
    std::uint64_t s = 0;
    for (std::uint64_t i = out_offsets_[node]; i < out_offsets_[node + 1]; ++i) s += out_weights_[i];
    return s;
}

std::uint64_t Digraph::in_strength(std::uint32_t node) const {
    if (!weighted_) return in_degree(node);
    std::uint64_t s = 0;
    for (std::uint64_t i = in_offsets_[node]; i < in_offsets_[node + 1]; ++i) s += in_weights_[i];
    return s;
}

std::uint64_t Digraph::total_weight() const {
    if (!weighted_) return num_edges();
    std::uint64_t s = 0;
    for (std::uint32_t w : out_weights_) s += w;
    return s;
}

std::uint32_t Digraph::edge_weight(std::uint32_t src, std::uint32_t dst) const {
    const std::uint32_t* b = out_targets_.data() + out_offsets_[src];
    const std::uint32_t* e = out_targets_.data() + out_offsets_[src + 1];
    const std::uint32_t* it = std::lower_bound(b, e, dst);
    if (it == e || *it != dst) return 0;
    return weighted_ ? out_weights_[out_offsets_[src] + static_cast<std::uint64_t>(it - b)] : 1u;
}

}  // namespace cfx
