// campaign-forensics: directed interaction graphs over dense node indices.
// SPDX-License-Identifier: MIT
//
// Graphs are stored in compressed sparse row form, both directions, over
// dense uint32 node indices.  Node ordering is canonical — sorted by the
// user-id *string* — so a graph built from a shuffled corpus is structurally
// and byte-for-byte (in exports) identical to one built from the original.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cfx/util/interner.hpp"

namespace cfx {

enum class GraphKind : std::uint8_t {
    category_network = 0,  ///< per-category repost network, unweighted
    interaction_ego = 1,   ///< single-interaction seed network, weighted
    aggregated_ego = 2,    ///< four interactions combined, weighted
    expanded_ego = 3,      ///< aggregated network over an expanded seed set
    generic = 4,           ///< synthetic/test graph
};

class Digraph {
public:
    /// Build from aggregated edges over corpus user ids.  `edges` holds
    /// (src_user, dst_user, weight) with unique ordered pairs; nodes are the
    /// edge endpoints plus nothing else, ordered by user-id string from
    /// `users`.  `weighted` false drops the weight array (all weights 1).
    static Digraph from_user_edges(const StringInterner& users,
                                   std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> edges,
                                   bool weighted, GraphKind kind, std::string label);

    /// Build a synthetic graph on nodes 0..num_nodes-1 directly (node ids
    /// are their own labels).  Pairs may repeat; weights accumulate.
    static Digraph from_index_edges(std::uint32_t num_nodes,
                                    const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>& edges,
                                    bool weighted, GraphKind kind, std::string label);

    std::uint32_t num_nodes() const { return static_cast<std::uint32_t>(node_user_.size()); }
    std::uint64_t num_edges() const { return static_cast<std::uint64_t>(out_targets_.size()); }
    bool weighted() const { return weighted_; }
    GraphKind kind() const { return kind_; }
    const std::string& label() const { return label_; }

    /// Corpus user id of a node (or the node index itself for index graphs).
    std::uint32_t user_of(std::uint32_t node) const { return node_user_[node]; }
    /// User-id string of a node ("#<index>" form for index-built graphs).
    std::string user_str(std::uint32_t node) const;

    /// Dense node index of a corpus user id, or npos if absent.
    static constexpr std::uint32_t npos = 0xffffffffu;
    std::uint32_t node_of_user(std::uint32_t user) const;

    // Per-node status byte (AccountStatus value, or 0xff when unknown);
    // filled by the network builders, defaulted to 0xff otherwise.
    const std::vector<std::uint8_t>& node_status() const { return node_status_; }
    std::vector<std::uint8_t>& node_status() { return node_status_; }

    // Seed markers for ego graphs (empty = no seed concept).
    const std::vector<char>& node_is_seed() const { return node_is_seed_; }
    std::vector<char>& node_is_seed() { return node_is_seed_; }

    struct EdgeSpan {
        const std::uint32_t* nodes_begin;
        const std::uint32_t* nodes_end;
        const std::uint32_t* weights;  ///< nullptr when unweighted
        std::size_t size() const { return static_cast<std::size_t>(nodes_end - nodes_begin); }
    };
    EdgeSpan out_edges(std::uint32_t node) const {
        return {out_targets_.data() + out_offsets_[node],
                out_targets_.data() + out_offsets_[node + 1],
                weighted_ ? out_weights_.data() + out_offsets_[node] : nullptr};
    }
    EdgeSpan in_edges(std::uint32_t node) const {
        return {in_sources_.data() + in_offsets_[node],
                in_sources_.data() + in_offsets_[node + 1],
                weighted_ ? in_weights_.data() + in_offsets_[node] : nullptr};
    }

    std::uint64_t out_degree(std::uint32_t node) const {
        return out_offsets_[node + 1] - out_offsets_[node];
    }
    std::uint64_t in_degree(std::uint32_t node) const {
        return in_offsets_[node + 1] - in_offsets_[node];
    }
    /// Sum of edge weights (equals the structural degree when unweighted).
    std::uint64_t out_strength(std::uint32_t node) const;
    std::uint64_t in_strength(std::uint32_t node) const;

    /// Total edge weight (E for unweighted graphs).
    std::uint64_t total_weight() const;

    /// Weight of edge src→dst, 0 if absent (binary search over out-row).
    std::uint32_t edge_weight(std::uint32_t src, std::uint32_t dst) const;

private:
    void build_csr(std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>& edges);

    std::vector<std::uint32_t> node_user_;
    std::vector<std::uint8_t> node_status_;
    std::vector<char> node_is_seed_;
    std::vector<std::uint64_t> out_offsets_{0};
    std::vector<std::uint32_t> out_targets_;
    std::vector<std::uint32_t> out_weights_;
    std::vector<std::uint64_t> in_offsets_{0};
    std::vector<std::uint32_t> in_sources_;
    std::vector<std::uint32_t> in_weights_;
    bool weighted_ = false;
    GraphKind kind_ = GraphKind::generic;
    std::string label_;
    const StringInterner* users_ = nullptr;  ///< non-owning; outlives graph in the pipeline

    // user id -> node index, laid out as the inverse of node_user_ sorted by
    // user id (binary search; avoids a hash table per graph).
    std::vector<std::uint32_t> user_sorted_nodes_;
};

}  // namespace cfx
