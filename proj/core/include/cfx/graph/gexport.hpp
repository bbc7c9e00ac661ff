// campaign-forensics: canonical graph exports (edge-list CSV and DOT).
// SPDX-License-Identifier: MIT
//
// Exports iterate nodes in the graph's canonical order (sorted by user-id
// string), so identical graphs serialize to identical bytes regardless of
// how the corpus rows were ordered.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cfx/graph/digraph.hpp"

namespace cfx {

/// "source,target,weight" rows; weight 1 for unweighted graphs.
void write_edge_csv(const Digraph& graph, std::ostream& out);
void write_edge_csv_file(const Digraph& graph, const std::string& path);

/// Graphviz digraph; `node_colors` (one X11/hex color per node) is optional.
/// Seed nodes render as boxes so ego seeds stand out.
void write_dot(const Digraph& graph, std::ostream& out,
               const std::vector<std::string>* node_colors = nullptr);
void write_dot_file(const Digraph& graph, const std::string& path,
                    const std::vector<std::string>* node_colors = nullptr);

/// Default per-node colors from account status (seeds orange, suspended red,
/// verified steel blue, not-verified gray, not-found light gray).
std::vector<std::string> status_node_colors(const Digraph& graph);

}  // namespace cfx
