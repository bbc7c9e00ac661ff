// campaign-forensics: interaction-network construction from the columnar corpus.
// SPDX-License-Identifier: MIT
#include "cfx/graph/netbuild.hpp"

#include <algorithm>
#include <tuple>

#include "cfx/util/error.hpp"

namespace cfx {

namespace {

using EdgeVec = std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>;

/// Append one interaction event `referenced → acting`, dropping self-loops.
inline void add_event(EdgeVec& edges, std::uint32_t referenced, std::uint32_t acting) {
    if (referenced == acting || referenced == kNoUser || acting == kNoUser) return;
    edges.emplace_back(referenced, acting, 1u);
}

/// Distinct mentioned users of one record, self-mentions removed.
void distinct_mentions(const Corpus& corpus, std::size_t rec, std::vector<std::uint32_t>& out) {
    out.clear();
    for (std::uint32_t m : corpus.mentions(rec)) {
        if (m != corpus.author[rec]) out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

void fill_node_status(Digraph& g, const ResolvedStatuses& statuses) {
    auto& bytes = g.node_status();
    for (std::uint32_t node = 0; node < g.num_nodes(); ++node)
        bytes[node] = statuses.by_user[g.user_of(node)];
}

void fill_node_seeds(Digraph& g, const std::vector<char>& is_seed_user) {
    auto& seeds = g.node_is_seed();
    seeds.assign(g.num_nodes(), 0);
    for (std::uint32_t node = 0; node < g.num_nodes(); ++node)
        seeds[node] = is_seed_user[g.user_of(node)];
}

}  // namespace

const char* interaction_token(Interaction i) {
    static constexpr const char* kTokens[kInteractionCount] = {"retweet", "mention", "reply",
                                                               "quote"};
    return kTokens[static_cast<int>(i)];
}

Digraph build_category_network(const Corpus& corpus, const ResolvedStatuses& statuses,
                               const CategoryMap& categories, NewsCategory category) {
    EdgeVec edges;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (corpus.kind[i] != TweetKind::retweet) continue;
        auto tagged = tag_news_category(corpus, i, categories);
        if (!tagged || *tagged != category) continue;
        add_event(edges, corpus.target[i], corpus.author[i]);
    }
    Digraph g = Digraph::from_user_edges(corpus.users, std::move(edges), /*weighted=*/false,
                                         GraphKind::category_network,
                                         std::string(news_category_token(category)));
    fill_node_status(g, statuses);
    return g;
}

std::array<Digraph, kNewsCategoryCount> build_all_category_networks(
    const Corpus& corpus, const ResolvedStatuses& statuses, const CategoryMap& categories) {
    std::array<EdgeVec, kNewsCategoryCount> buckets;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (corpus.kind[i] != TweetKind::retweet) continue;
        auto tagged = tag_news_category(corpus, i, categories);
        if (!tagged) continue;
        add_event(buckets[static_cast<int>(*tagged)], corpus.target[i], corpus.author[i]);
    }
    std::array<Digraph, kNewsCategoryCount> nets;
    for (int c = 0; c < kNewsCategoryCount; ++c) {
        nets[c] = Digraph::from_user_edges(
            corpus.users, std::move(buckets[c]), /*weighted=*/false, GraphKind::category_network,
            std::string(news_category_token(static_cast<NewsCategory>(c))));
        fill_node_status(nets[c], statuses);
    }
    return nets;
}

std::vector<char> seed_users_by_status(const Corpus& corpus, const ResolvedStatuses& statuses,
                                       AccountStatus status) {
    std::vector<char> seeds(corpus.users.size(), 0);
    const auto wanted = static_cast<std::uint8_t>(status);
    for (std::uint32_t u = 0; u < seeds.size(); ++u)
        seeds[u] = (statuses.by_user[u] == wanted) ? 1 : 0;
    return seeds;
}

Digraph build_interaction_ego(const Corpus& corpus, const ResolvedStatuses& statuses,
                              const std::vector<char>& is_seed_user, Interaction interaction) {
    if (is_seed_user.size() != corpus.users.size())
        throw ValidationError("seed flag vector does not match the corpus user table");

    const auto touches_seed = [&is_seed_user](std::uint32_t a, std::uint32_t b) {
        return is_seed_user[a] || is_seed_user[b];
    };

    EdgeVec edges;
    std::vector<std::uint32_t> scratch;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const std::uint32_t acting = corpus.author[i];
        if (interaction == Interaction::mention) {
            // Mentions are carried by records of every kind; one event per
            // distinct mentioned account per record.
            distinct_mentions(corpus, i, scratch);
            for (std::uint32_t referenced : scratch)
                if (touches_seed(referenced, acting)) add_event(edges, referenced, acting);
            continue;
        }
        const TweetKind want = interaction == Interaction::retweet ? TweetKind::retweet
                               : interaction == Interaction::reply ? TweetKind::reply
                                                                   : TweetKind::quote;
        if (corpus.kind[i] != want) continue;
        const std::uint32_t referenced = corpus.target[i];
        if (referenced == kNoUser || referenced == acting) continue;
        if (touches_seed(referenced, acting)) add_event(edges, referenced, acting);
    }

    Digraph g = Digraph::from_user_edges(corpus.users, std::move(edges), /*weighted=*/true,
                                         GraphKind::interaction_ego,
                                         interaction_token(interaction));
    fill_node_status(g, statuses);
    fill_node_seeds(g, is_seed_user);
    return g;
}

Digraph aggregate_ego(const std::array<Digraph, kInteractionCount>& parts, const Corpus& corpus,
                      const ResolvedStatuses& statuses, const std::vector<char>& is_seed_user,
                      GraphKind kind, const char* label) {
    EdgeVec edges;
    for (const Digraph& part : parts) {
        for (std::uint32_t s = 0; s < part.num_nodes(); ++s) {
            const auto span = part.out_edges(s);
            for (std::size_t k = 0; k < span.size(); ++k) {
                edges.emplace_back(part.user_of(s), part.user_of(span.nodes_begin[k]),
                                   span.weights ? span.weights[k] : 1u);
            }
        }
    }
    Digraph g = Digraph::from_user_edges(corpus.users, std::move(edges), /*weighted=*/true, kind,
                                         label);
    fill_node_status(g, statuses);
    fill_node_seeds(g, is_seed_user);
    return g;
}

std::vector<char> expanded_seed_users(const Digraph& aggregated, const Corpus& corpus,
                                      const ResolvedStatuses& statuses,
                                      const std::vector<char>& is_seed_user) {
    std::vector<char> expanded = is_seed_user;
    expanded.resize(corpus.users.size(), 0);
    const auto suspended = static_cast<std::uint8_t>(AccountStatus::suspended);
    for (std::uint32_t node = 0; node < aggregated.num_nodes(); ++node) {
        const std::uint32_t user = aggregated.user_of(node);
        if (statuses.by_user[user] == suspended) expanded[user] = 1;
    }
    return expanded;
}

Digraph build_expanded_ego(const Corpus& corpus, const ResolvedStatuses& statuses,
                           const std::vector<char>& expanded_seeds) {
    // Same construction as the aggregated network, only the seed set differs.
    std::array<Digraph, kInteractionCount> parts;
    for (int i = 0; i < kInteractionCount; ++i)
        parts[i] = build_interaction_ego(corpus, statuses, expanded_seeds,
                                         static_cast<Interaction>(i));
    return aggregate_ego(parts, corpus, statuses, expanded_seeds, GraphKind::expanded_ego,
                         "expanded");
}

TopActiveBreakdown top_active_breakdown(const Digraph& graph, Direction direction,
                                        std::size_t n) {
    // Rank non-seed nodes by structural degree; break ties by user-id string
    // so the ranking is independent of node numbering.
    std::vector<std::uint32_t> candidates;
    const auto& seeds = graph.node_is_seed();
    for (std::uint32_t node = 0; node < graph.num_nodes(); ++node)
        if (seeds.empty() || !seeds[node]) candidates.push_back(node);

    const auto degree = [&graph, direction](std::uint32_t node) {
        return direction == Direction::out ? graph.out_degree(node) : graph.in_degree(node);
    };
    std::sort(candidates.begin(), candidates.end(),
              [&](std::uint32_t a, std::uint32_t b) {
                  const std::uint64_t da = degree(a), db = degree(b);
                  if (da != db) return da > db;
                  return graph.user_str(a) < graph.user_str(b);
              });
    if (candidates.size() > n) candidates.resize(n);

    TopActiveBreakdown out;
    out.ranked = candidates.size();
    for (std::uint32_t node : candidates) {
        const std::uint8_t status = graph.node_status()[node];
        if (status == ResolvedStatuses::kAbsent)
            ++out.unknown_count;
        else
            ++out.counts[status];
    }
    if (out.ranked > 0) {
        for (int s = 0; s < kAccountStatusCount; ++s)
            out.shares[s] = 100.0 * static_cast<double>(out.counts[s]) /
                            static_cast<double>(out.ranked);
        out.unknown_share =
            100.0 * static_cast<double>(out.unknown_count) / static_cast<double>(out.ranked);
    }
    return out;
}

DegreeSummary summarize(const Digraph& graph) {
    DegreeSummary s;
    s.n = graph.num_nodes();
    s.e = graph.num_edges();
    s.mean_half_degree = s.n == 0 ? 0.0 : static_cast<double>(s.e) / static_cast<double>(s.n);
    std::uint64_t ira_out = 0, ira_in = 0;
    const auto ira = static_cast<std::uint8_t>(AccountStatus::ira);
    for (std::uint32_t node = 0; node < graph.num_nodes(); ++node) {
        if (graph.node_status()[node] != ira) continue;
        ++s.n_ira;
        ira_out += graph.out_degree(node);
        ira_in += graph.in_degree(node);
    }
    if (s.n_ira > 0) {
        s.ira_mean_out = static_cast<double>(ira_out) / static_cast<double>(s.n_ira);
        s.ira_mean_in = static_cast<double>(ira_in) / static_cast<double>(s.n_ira);
    }
    return s;
}

}  // namespace cfx
