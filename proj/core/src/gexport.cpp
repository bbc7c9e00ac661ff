// campaign-forensics: graph serialization helpers.
// SPDX-License-Identifier: MIT
#include "cfx/graph/gexport.hpp"

#include <fstream>
#include <ostream>

#include "cfx/corpus/tables.hpp"
#include "cfx/util/csv.hpp"
#include "cfx/util/error.hpp"

namespace cfx {

namespace {

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    return out;
}

/// DOT string literal with minimal escaping.
std::string dot_quote(const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') q.push_back('\\');
        q.push_back(c);
    }
    q.push_back('"');
    return q;
}

}  // namespace

void write_edge_csv(const Digraph& graph, std::ostream& out) {
    out << "source,target,weight\n";
    for (std::uint32_t s = 0; s < graph.num_nodes(); ++s) {
        const auto span = graph.out_edges(s);
        const std::string src = csv_escape(graph.user_str(s));
        for (std::size_t k = 0; k < span.size(); ++k) {
            out << src << ',' << csv_escape(graph.user_str(span.nodes_begin[k])) << ','
                << (span.weights ? span.weights[k] : 1u) << '\n';
        }
    }
}

void write_edge_csv_file(const Digraph& graph, const std::string& path) {
    auto out = open_output(path);
    write_edge_csv(graph, out);
    if (!out) throw IoError("failed while writing: " + path);
}

void write_dot(const Digraph& graph, std::ostream& out,
               const std::vector<std::string>* node_colors) {
    out << "digraph " << dot_quote(graph.label().empty() ? "g" : graph.label()) << " {\n";
    out << "  node [style=filled, fillcolor=white];\n";
    const auto& seeds = graph.node_is_seed();
    for (std::uint32_t v = 0; v < graph.num_nodes(); ++v) {
        out << "  " << dot_quote(graph.user_str(v));
        std::string attrs;
        if (node_colors != nullptr && !(*node_colors)[v].empty())
            attrs += "fillcolor=" + dot_quote((*node_colors)[v]);
        if (!seeds.empty() && seeds[v]) {
            if (!attrs.empty()) attrs += ", ";
            attrs += "shape=box";
        }
        if (!attrs.empty()) out << " [" << attrs << "]";
        out << ";\n";
    }
    for (std::uint32_t s = 0; s < graph.num_nodes(); ++s) {
        const auto span = graph.out_edges(s);
        for (std::size_t k = 0; k < span.size(); ++k) {
            out << "  " << dot_quote(graph.user_str(s)) << " -> "
                << dot_quote(graph.user_str(span.nodes_begin[k]));
            if (span.weights != nullptr) out << " [weight=" << span.weights[k] << "]";
            out << ";\n";
        }
    }
    out << "}\n";
}

void write_dot_file(const Digraph& graph, const std::string& path,
                    const std::vector<std::string>* node_colors) {
    auto out = open_output(path);
    write_dot(graph, out, node_colors);
    if (!out) throw IoError("failed while writing: " + path);
}

std::vector<std::string> status_node_colors(const Digraph& graph) {
    std::vector<std::string> colors(graph.num_nodes());
    const auto& seeds = graph.node_is_seed();
    for (std::uint32_t v = 0; v < graph.num_nodes(); ++v) {
        if (!seeds.empty() && seeds[v]) {
            colors[v] = "orange";
            continue;
        }
        switch (graph.node_status()[v]) {
            case static_cast<std::uint8_t>(AccountStatus::suspended): colors[v] = "indianred"; break;
            case static_cast<std::uint8_t>(AccountStatus::verified): colors[v] = "steelblue"; break;
            case static_cast<std::uint8_t>(AccountStatus::not_verified): colors[v] = "gray80"; break;
            case static_cast<std::uint8_t>(AccountStatus::not_found): colors[v] = "gray90"; break;
            case static_cast<std::uint8_t>(AccountStatus::ira): colors[v] = "orange"; break;
            default: colors[v] = "white"; break;
        }
    }
    return colors;
}

}  // namespace cfx
