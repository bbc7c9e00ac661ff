// campaign-forensics: unit tests for the digraph container, the network
// builders (category, ego, aggregated, expanded), rankings, and exports.
// SPDX-License-Identifier: MIT
#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cfx/corpus/ingest.hpp"
#include "cfx/graph/gexport.hpp"
#include "cfx/graph/netbuild.hpp"
#include "cfx/util/error.hpp"
#include "cfx/util/rng.hpp"
#include "cfx/util/time.hpp"
#include "doctest.h"

namespace {

std::filesystem::path temp_dir(const char* tag) {
    auto dir = std::filesystem::temp_directory_path() / (std::string("cfx_graph_") + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

cfx::TimeWindow june_window() {
    return {*cfx::parse_iso8601_utc("2016-06-01T00:00:00Z"),
            *cfx::parse_iso8601_utc("2016-06-14T23:59:59Z")};
}

/// Deterministic ~170-tweet fixture exercising every interaction kind,
/// self-interactions, repeated pairs, and mapped/unmapped URLs.
std::vector<std::string> fixture_rows() {
    const char* kKinds[] = {"original", "retweet", "reply", "quote", "mention"};
    const char* kUrls[] = {"",  // no URL
                           "red.example/a", "blue.example/b", "unmapped.example/c"};
    std::vector<std::string> rows;
    cfx::Rng rng(2016);
    for (int i = 0; i < 170; ++i) {
        const int author = static_cast<int>(rng.bounded(12));
        const int kind = static_cast<int>(rng.bounded(5));
        const int target = static_cast<int>(rng.bounded(12));  // may equal author
        const int url = static_cast<int>(rng.bounded(4));
        std::string mentions;
        if (rng.bounded(3) == 0) {
            mentions = "u" + std::to_string(rng.bounded(12));
            if (rng.bounded(2) == 0) mentions += ";u" + std::to_string(rng.bounded(12));
        }
        const long long ts = 1464739200LL + 600LL * i;
        std::string row = "t" + std::to_string(i) + ",u" + std::to_string(author) + "," +
                          cfx::format_iso8601_utc(ts) + "," + kKinds[kind] + ",";
        if (kind == 1 || kind == 2 || kind == 3) row += "u" + std::to_string(target);
        row += "," + mentions + "," + std::string(kUrls[url]) + ",,App";
        rows.push_back(row);
    }
    return rows;
}

cfx::Corpus load_rows(const std::filesystem::path& dir, const std::vector<std::string>& rows) {
    const auto path = dir / "corpus.csv";
    std::ofstream out(path);
    for (const auto& r : rows) out << r << "\n";
    out.close();
    return cfx::load_corpus(path.string(), june_window());
}

using EdgeOracle = std::map<std::pair<std::string, std::string>, std::uint64_t>;

/// Collect a graph's edges keyed by user-id strings.
EdgeOracle graph_edges(const cfx::Digraph& g) {
    EdgeOracle out;
    for (std::uint32_t s = 0; s < g.num_nodes(); ++s) {
        const auto span = g.out_edges(s);
        for (std::size_t k = 0; k < span.size(); ++k) {
            const std::uint64_t w = span.weights ? span.weights[k] : 1u;
            out[{g.user_str(s), g.user_str(span.nodes_begin[k])}] = w;
        }
    }
    return out;
}

std::string user(const cfx::Corpus& corpus, std::uint32_t id) {
    return std::string(corpus.users.str(id));
}

}  // namespace

TEST_CASE("digraph aggregates duplicate pairs and keeps both CSRs consistent") {
    using E = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>;
    const std::vector<E> edges{{0, 1, 2}, {0, 1, 3}, {2, 3, 1}, {3, 2, 4}};
    const cfx::Digraph g =
        cfx::Digraph::from_index_edges(4, edges, /*weighted=*/true, cfx::GraphKind::generic, "t");

    CHECK(g.num_nodes() == 4);
    CHECK(g.num_edges() == 3);  // duplicate (0,1) collapsed
    CHECK(g.edge_weight(0, 1) == 5);
    CHECK(g.edge_weight(2, 3) == 1);
    CHECK(g.edge_weight(1, 0) == 0);  // direction matters
    CHECK(g.out_degree(0) == 1);
    CHECK(g.in_degree(1) == 1);
    CHECK(g.out_strength(0) == 5);
    CHECK(g.in_strength(1) == 5);
    CHECK(g.total_weight() == 10);

    // Out- and in-CSR describe the same edge multiset.
    std::uint64_t out_sum = 0, in_sum = 0;
    for (std::uint32_t v = 0; v < g.num_nodes(); ++v) {
        out_sum += g.out_degree(v);
        in_sum += g.in_degree(v);
    }
    CHECK(out_sum == g.num_edges());
    CHECK(in_sum == g.num_edges());

    CHECK_THROWS_AS(cfx::Digraph::from_index_edges(2, {E{0, 5, 1}}, true,
                                                   cfx::GraphKind::generic, "bad"),
                    cfx::ValidationError);
}

TEST_CASE("category networks match a quadratic oracle and are row-order independent") {
    const auto dir = temp_dir("category");
    auto rows = fixture_rows();
    const cfx::Corpus corpus = load_rows(dir, rows);

    const cfx::CategoryMap categories = cfx::CategoryMap::from_rows(
        {{"red.example", cfx::NewsCategory::right}, {"blue.example", cfx::NewsCategory::left}});
    const cfx::StatusTable statuses = cfx::StatusTable::from_rows({
        {"u0", cfx::AccountStatus::ira},
        {"u1", cfx::AccountStatus::ira},
        {"u2", cfx::AccountStatus::suspended},
        {"u3", cfx::AccountStatus::suspended},
        {"u4", cfx::AccountStatus::verified},
        {"u5", cfx::AccountStatus::verified},
        {"u6", cfx::AccountStatus::not_verified},
        {"u7", cfx::AccountStatus::not_verified},
        {"u8", cfx::AccountStatus::not_found},
        {"u9", cfx::AccountStatus::not_found},
        // u10, u11 unlisted on purpose
    });
    const cfx::ResolvedStatuses resolved = cfx::resolve_statuses(corpus, statuses);

    const auto nets = cfx::build_all_category_networks(corpus, resolved, categories);

    // Quadratic oracle: unique (target → author) pairs of category-tagged
    // retweets, self-loops dropped.
    std::array<std::set<std::pair<std::string, std::string>>, cfx::kNewsCategoryCount> expected;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (corpus.kind[i] != cfx::TweetKind::retweet) continue;
        const auto cat = cfx::tag_news_category(corpus, i, categories);
        if (!cat) continue;
        if (corpus.target[i] == cfx::kNoUser || corpus.target[i] == corpus.author[i]) continue;
        expected[static_cast<int>(*cat)].insert(
            {user(corpus, corpus.target[i]), user(corpus, corpus.author[i])});
    }

    for (int c = 0; c < cfx::kNewsCategoryCount; ++c) {
        const EdgeOracle got = graph_edges(nets[c]);
        CHECK(got.size() == expected[c].size());
        for (const auto& [edge, w] : got) {
            CHECK(expected[c].count(edge) == 1);
            CHECK(w == 1);
        }
        // mean in-degree == mean out-degree == E/N on every category network.
        const cfx::DegreeSummary sum = cfx::summarize(nets[c]);
        if (sum.n > 0) {
            std::uint64_t in_total = 0, out_total = 0;
            for (std::uint32_t v = 0; v < nets[c].num_nodes(); ++v) {
                in_total += nets[c].in_degree(v);
                out_total += nets[c].out_degree(v);
            }
            CHECK(in_total == sum.e);
            CHECK(out_total == sum.e);
            CHECK(sum.mean_half_degree ==
                  static_cast<double>(sum.e) / static_cast<double>(sum.n));
        }
    }
    REQUIRE(expected[static_cast<int>(cfx::NewsCategory::right)].size() > 0);
    REQUIRE(expected[static_cast<int>(cfx::NewsCategory::left)].size() > 0);

    // Shuffling the corpus rows must not change the exported bytes.
    cfx::Rng shuffler(99);
    auto shuffled = rows;
    shuffler.shuffle(shuffled);
    REQUIRE(shuffled != rows);
    const auto dir2 = temp_dir("category2");
    const cfx::Corpus corpus2 = load_rows(dir2, shuffled);
    const cfx::ResolvedStatuses resolved2 = cfx::resolve_statuses(corpus2, statuses);
    const auto nets2 = cfx::build_all_category_networks(corpus2, resolved2, categories);
    for (int c = 0; c < cfx::kNewsCategoryCount; ++c) {
        std::ostringstream a, b;
        cfx::write_edge_csv(nets[c], a);
        cfx::write_edge_csv(nets2[c], b);
        CHECK(a.str() == b.str());
    }
    std::filesystem::remove_all(dir);
    std::filesystem::remove_all(dir2);
}

TEST_CASE("ego networks count seed-incident interactions per channel") {
    const auto dir = temp_dir("ego");
    const cfx::Corpus corpus = load_rows(dir, fixture_rows());
    const cfx::StatusTable statuses = cfx::StatusTable::from_rows({
        {"u0", cfx::AccountStatus::ira},
        {"u1", cfx::AccountStatus::ira},
        {"u2", cfx::AccountStatus::suspended},
        {"u3", cfx::AccountStatus::suspended},
        {"u4", cfx::AccountStatus::verified},
        {"u6", cfx::AccountStatus::not_verified},
        {"u8", cfx::AccountStatus::not_found},
    });
    const cfx::ResolvedStatuses resolved = cfx::resolve_statuses(corpus, statuses);
    const std::vector<char> seeds =
        cfx::seed_users_by_status(corpus, resolved, cfx::AccountStatus::ira);

    // Independent quadratic oracle per interaction channel.
    std::array<EdgeOracle, cfx::kInteractionCount> expected;
    const auto is_seed = [&](std::uint32_t u) { return seeds[u] != 0; };
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const std::uint32_t acting = corpus.author[i];
        // Mentions: every record kind carries them; distinct per record.
        std::set<std::uint32_t> mentioned;
        for (std::uint32_t m : corpus.mentions(i))
            if (m != acting) mentioned.insert(m);
        for (std::uint32_t m : mentioned)
            if (is_seed(m) || is_seed(acting))
                ++expected[static_cast<int>(cfx::Interaction::mention)][
                    {user(corpus, m), user(corpus, acting)}];
        // Repost-like channels: the record's target.
        int channel = -1;
        if (corpus.kind[i] == cfx::TweetKind::retweet)
            channel = static_cast<int>(cfx::Interaction::retweet);
        else if (corpus.kind[i] == cfx::TweetKind::reply)
            channel = static_cast<int>(cfx::Interaction::reply);
        else if (corpus.kind[i] == cfx::TweetKind::quote)
            channel = static_cast<int>(cfx::Interaction::quote);
        if (channel < 0) continue;
        const std::uint32_t referenced = corpus.target[i];
        if (referenced == cfx::kNoUser || referenced == acting) continue;
        if (is_seed(referenced) || is_seed(acting))
            ++expected[channel][{user(corpus, referenced), user(corpus, acting)}];
    }

    std::array<cfx::Digraph, cfx::kInteractionCount> parts;
    for (int i = 0; i < cfx::kInteractionCount; ++i) {
        parts[i] = cfx::build_interaction_ego(corpus, resolved, seeds,
                                              static_cast<cfx::Interaction>(i));
        CHECK(graph_edges(parts[i]) == expected[i]);
        REQUIRE(expected[i].size() > 0);  // fixture exercises every channel
    }

    // Aggregation sums the four channels per ordered pair.
    EdgeOracle combined;
    for (const auto& channel : expected)
        for (const auto& [edge, w] : channel) combined[edge] += w;
    const cfx::Digraph agg = cfx::aggregate_ego(parts, corpus, resolved, seeds);
    CHECK(graph_edges(agg) == combined);
    CHECK(agg.kind() == cfx::GraphKind::aggregated_ego);
    CHECK(agg.label() == "aggregated");

    // Expanded seed set: original seeds plus suspended accounts present in
    // the aggregated network.
    const std::vector<char> expanded = cfx::expanded_seed_users(agg, corpus, resolved, seeds);
    std::size_t added = 0;
    for (std::uint32_t u = 0; u < corpus.users.size(); ++u) {
        if (seeds[u]) CHECK(expanded[u] == 1);
        if (expanded[u] && !seeds[u]) {
            ++added;
            CHECK(resolved.by_user[u] ==
                  static_cast<std::uint8_t>(cfx::AccountStatus::suspended));
            CHECK(agg.node_of_user(u) != cfx::Digraph::npos);
        }
    }
    CHECK(added > 0);

    // The expanded network is the aggregated construction over the new set.
    const cfx::Digraph exp = cfx::build_expanded_ego(corpus, resolved, expanded);
    std::array<cfx::Digraph, cfx::kInteractionCount> exp_parts;
    for (int i = 0; i < cfx::kInteractionCount; ++i)
        exp_parts[i] = cfx::build_interaction_ego(corpus, resolved, expanded,
                                                  static_cast<cfx::Interaction>(i));
    const cfx::Digraph exp_ref = cfx::aggregate_ego(exp_parts, corpus, resolved, expanded,
                                                    cfx::GraphKind::expanded_ego, "expanded");
    CHECK(graph_edges(exp) == graph_edges(exp_ref));
    CHECK(exp.num_edges() >= agg.num_edges());
    std::filesystem::remove_all(dir);
}

TEST_CASE("summarize reports seed-group degree means") {
    cfx::StringInterner users;
    const auto a = users.intern("a"), b = users.intern("b"), c = users.intern("c"),
               d = users.intern("d"), ira1 = users.intern("ira1");
    using E = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>;
    std::vector<E> edges{{ira1, a, 1}, {ira1, b, 1}, {a, b, 1}, {b, c, 1}, {c, a, 1}, {d, a, 1}};
    cfx::Digraph g = cfx::Digraph::from_user_edges(users, std::move(edges), false,
                                                   cfx::GraphKind::category_network, "mini");
    auto& status = g.node_status();
    status[g.node_of_user(ira1)] = static_cast<std::uint8_t>(cfx::AccountStatus::ira);
    status[g.node_of_user(a)] = static_cast<std::uint8_t>(cfx::AccountStatus::verified);
    status[g.node_of_user(b)] = static_cast<std::uint8_t>(cfx::AccountStatus::suspended);
    status[g.node_of_user(c)] = static_cast<std::uint8_t>(cfx::AccountStatus::not_verified);
    // d stays unknown

    const cfx::DegreeSummary s = cfx::summarize(g);
    CHECK(s.n == 5);
    CHECK(s.e == 6);
    CHECK(s.mean_half_degree == doctest::Approx(1.2));
    CHECK(s.n_ira == 1);
    CHECK(s.ira_mean_out == doctest::Approx(2.0));
    CHECK(s.ira_mean_in == doctest::Approx(0.0));
}

TEST_CASE("top-active ranking excludes seeds and buckets unknown statuses") {
    cfx::StringInterner users;
    const auto a = users.intern("a"), b = users.intern("b"), c = users.intern("c"),
               d = users.intern("d"), s1 = users.intern("seed1");
    using E = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>;
    std::vector<E> edges{{s1, a, 1}, {s1, b, 1}, {a, b, 1}, {b, c, 1}, {c, a, 1}, {d, a, 1}};
    cfx::Digraph g = cfx::Digraph::from_user_edges(users, std::move(edges), true,
                                                   cfx::GraphKind::aggregated_ego, "agg");
    auto& status = g.node_status();
    status[g.node_of_user(s1)] = static_cast<std::uint8_t>(cfx::AccountStatus::ira);
    status[g.node_of_user(a)] = static_cast<std::uint8_t>(cfx::AccountStatus::verified);
    status[g.node_of_user(b)] = static_cast<std::uint8_t>(cfx::AccountStatus::suspended);
    status[g.node_of_user(c)] = static_cast<std::uint8_t>(cfx::AccountStatus::not_verified);
    auto& seeds = g.node_is_seed();
    seeds.assign(g.num_nodes(), 0);
    seeds[g.node_of_user(s1)] = 1;

    // Out-direction, top 2: all non-seeds have out-degree 1, ties break by
    // user-id string → a then b.
    const cfx::TopActiveBreakdown top2 = cfx::top_active_breakdown(g, cfx::Direction::out, 2);
    CHECK(top2.ranked == 2);
    CHECK(top2.counts[static_cast<int>(cfx::AccountStatus::verified)] == 1);
    CHECK(top2.counts[static_cast<int>(cfx::AccountStatus::suspended)] == 1);
    CHECK(top2.shares[static_cast<int>(cfx::AccountStatus::verified)] == doctest::Approx(50.0));
    CHECK(top2.unknown_count == 0);

    // In-direction, all four non-seeds rank; d has no status record.
    const cfx::TopActiveBreakdown all = cfx::top_active_breakdown(g, cfx::Direction::in, 10);
    CHECK(all.ranked == 4);
    CHECK(all.counts[static_cast<int>(cfx::AccountStatus::verified)] == 1);
    CHECK(all.counts[static_cast<int>(cfx::AccountStatus::suspended)] == 1);
    CHECK(all.counts[static_cast<int>(cfx::AccountStatus::not_verified)] == 1);
    CHECK(all.unknown_count == 1);
    CHECK(all.unknown_share == doctest::Approx(25.0));
}

TEST_CASE("exports are canonical and mark seeds") {
    cfx::StringInterner users;
    const auto s1 = users.intern("zseed"), a = users.intern("alpha");
    using E = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>;
    std::vector<E> edges{{s1, a, 3}};
    cfx::Digraph g = cfx::Digraph::from_user_edges(users, std::move(edges), true,
                                                   cfx::GraphKind::interaction_ego, "retweet");
    g.node_is_seed().assign(g.num_nodes(), 0);
    g.node_is_seed()[g.node_of_user(s1)] = 1;
    g.node_status()[g.node_of_user(s1)] = static_cast<std::uint8_t>(cfx::AccountStatus::ira);

    std::ostringstream csv;
    cfx::write_edge_csv(g, csv);
    CHECK(csv.str() == "source,target,weight\nzseed,alpha,3\n");

    std::ostringstream dot;
    const auto colors = cfx::status_node_colors(g);
    cfx::write_dot(g, dot, &colors);
    const std::string text = dot.str();
    CHECK(text.find("digraph") != std::string::npos);
    CHECK(text.find("box") != std::string::npos);        // seed rendered as a box
    CHECK(text.find("\"zseed\" -> \"alpha\"") != std::string::npos);

    const auto dir = temp_dir("export");
    const auto path = (dir / "g.csv").string();
    cfx::write_edge_csv_file(g, path);
    std::ifstream in(path);
    std::ostringstream back;
    back << in.rdbuf();
    CHECK(back.str() == csv.str());
    std::filesystem::remove_all(dir);
}
