// campaign-forensics: pipeline orchestration.
// SPDX-License-Identifier: MIT
#include "cfx/pipeline/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>

#include "cfx/analysis/activity.hpp"
#include "cfx/analysis/discover.hpp"
#include "cfx/analysis/effects.hpp"
#include "cfx/graph/gexport.hpp"
#include "cfx/pipeline/report.hpp"
#include "cfx/stats/stl.hpp"
#include "cfx/util/error.hpp"
#include "cfx/util/parallel.hpp"
#include "cfx/util/rng.hpp"

namespace cfx {

namespace {

/// Stage tags for derived seeds (values are arbitrary but frozen).
enum StageTag : std::uint64_t {
    kTagDegstats = 1,
    kTagCommunityEgo = 2,
    kTagCommunityExpanded = 3,
    kTagCausalIra = 4,
    kTagCausalSuspended = 5,
};

bool is_constant(const std::vector<double>& series) {
    if (series.empty()) return true;
    const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
    return *lo == *hi;
}

std::string require_io_path(const Config& config, const std::string& key) {
    const auto value = config.get("io", key);
    if (!value || value->empty())
        throw ValidationError("configuration is missing io." + key);
    return *value;
}

UnixTime require_window_edge(const Config& config, const std::string& key) {
    const auto value = config.get("window", key);
    if (!value) throw ValidationError("configuration is missing window." + key);
    const auto parsed = parse_iso8601_utc(*value);
    if (!parsed)
        throw ValidationError("window." + key + " is not a YYYY-MM-DDTHH:MM:SSZ timestamp: " +
                              *value);
    return *parsed;
}

}  // namespace

std::uint64_t stage_seed(std::uint64_t base, std::uint64_t tag) {
    std::uint64_t state = base ^ (tag * 0x9e3779b97f4a7c15ULL);
    return splitmix64(state);
}

Pipeline::Pipeline(Config config, const PipelineOptions& options) : config_(std::move(config)) {
    if (options.out_dir) config_.set("io", "out_dir", *options.out_dir);
    if (options.seed) config_.set("run", "seed", std::to_string(*options.seed));
    if (options.threads) config_.set("run", "threads", std::to_string(*options.threads));

    out_dir_ = config_.get_string("io", "out_dir", "out");
    const std::int64_t seed = config_.get_int("run", "seed", 42);
    seed_ = static_cast<std::uint64_t>(seed);
    threads_ = static_cast<int>(config_.get_int("run", "threads", 0));
    set_thread_cap(threads_ < 0 ? 0u : static_cast<unsigned>(threads_));

    manifest_.set_tool(kToolName, kToolVersion);
    manifest_.set_config(config_);
    manifest_.set_seed(seed_);
    manifest_.set_threads(threads_);

    namespace fs = std::filesystem;
    for (const char* sub :
         {"", "/networks", "/networks/edges", "/degstats", "/stance", "/community", "/causal",
          "/reports"}) {
        std::error_code ec;
        fs::create_directories(out_dir_ + sub, ec);
        if (ec) throw IoError("cannot create output directory: " + out_dir_ + sub);
    }
}

Pipeline::~Pipeline() = default;

void Pipeline::run_stage(const char* name, const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    try {
        body();
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("stage ") + name + ": " + e.what());
    } catch (const IoError& e) {
        throw IoError(std::string("stage ") + name + ": " + e.what());
    } catch (const NumericalError& e) {
        throw NumericalError(std::string("stage ") + name + ": " + e.what());
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    timings_.add(name, elapsed.count());
}

void Pipeline::write_artifact(const std::string& relative,
                              const std::function<void(std::ostream&)>& writer) {
    const std::string path = out_dir_ + "/" + relative;
    write_csv_file(path, writer);
    manifest_.add_artifact(relative, path);
}

void Pipeline::warn(const std::string& stage, const std::string& text) {
    manifest_.add_warning(stage, text);
}

void Pipeline::require_ingest() {
    if (!ingest_done_) ingest();
}
void Pipeline::require_netbuild() {
    if (!netbuild_done_) netbuild();
}
void Pipeline::require_stance() {
    if (!stance_done_) stance();
}

// --- ingest ----------------------------------------------------------------

void Pipeline::ingest() {
    if (ingest_done_) return;
    run_stage("ingest", [&] {
        TimeWindow window;
        window.start = require_window_edge(config_, "start");
        window.end = require_window_edge(config_, "end");
        if (window.end < window.start)
            throw ValidationError("window.end precedes window.start");

        const std::string corpus_path = require_io_path(config_, "corpus");
        const std::string statuses_path = require_io_path(config_, "statuses");
        const std::string categories_path = require_io_path(config_, "categories");
        const std::string clients_path = require_io_path(config_, "clients");
        const std::string lexicon_path = require_io_path(config_, "lexicon");

        const double max_malformed =
            config_.get_double("ingest", "max_malformed_fraction", kDefaultMaxMalformedFraction);

        corpus_ = std::make_unique<Corpus>(
            load_corpus(corpus_path, window, &ingest_report_, max_malformed));
        status_table_ = StatusTable::load(statuses_path);
        category_map_ = CategoryMap::load(categories_path);
        client_registry_ = ClientRegistry::load(clients_path);
        seed_lexicon_ = StanceLexicon::load(lexicon_path);
        statuses_ = resolve_statuses(*corpus_, status_table_);

        manifest_.add_input("corpus", corpus_path);
        manifest_.add_input("statuses", statuses_path);
        manifest_.add_input("categories", categories_path);
        manifest_.add_input("clients", clients_path);
        manifest_.add_input("lexicon", lexicon_path);
        manifest_.add_counter("ingest", "lines", ingest_report_.lines);
        manifest_.add_counter("ingest", "accepted", ingest_report_.accepted);
        manifest_.add_counter("ingest", "malformed", ingest_report_.malformed);
        manifest_.add_counter("ingest", "duplicate_ids", ingest_report_.duplicate_ids);
        manifest_.add_counter("ingest", "outside_window", ingest_report_.outside_window);

        write_artifact("ingest_report.csv",
                       [&](std::ostream& out) { write_ingest_report_csv(ingest_report_, out); });
    });
    ingest_done_ = true;
}

// --- netbuild ---------------------------------------------------------------

void Pipeline::netbuild() {
    if (netbuild_done_) return;
    require_ingest();
    run_stage("netbuild", [&] {
        category_nets_ = std::make_unique<std::array<Digraph, kNewsCategoryCount>>(
            build_all_category_networks(*corpus_, statuses_, category_map_));

        const std::vector<char> ira_seeds =
            seed_users_by_status(*corpus_, statuses_, AccountStatus::ira);
        std::array<Digraph, kInteractionCount> parts;
        for (int i = 0; i < kInteractionCount; ++i)
            parts[i] = build_interaction_ego(*corpus_, statuses_, ira_seeds,
                                             static_cast<Interaction>(i));
        aggregated_ego_ = std::make_unique<Digraph>(
            aggregate_ego(parts, *corpus_, statuses_, ira_seeds));
        const std::vector<char> expanded_seeds =
            expanded_seed_users(*aggregated_ego_, *corpus_, statuses_, ira_seeds);
        expanded_ego_ =
            std::make_unique<Digraph>(build_expanded_ego(*corpus_, statuses_, expanded_seeds));

        std::vector<std::pair<std::string, DegreeSummary>> category_rows;
        for (const Digraph& net : *category_nets_)
            category_rows.emplace_back(net.label(), summarize(net));
        write_artifact("networks/category_summary.csv", [&](std::ostream& out) {
            write_network_summary_csv(category_rows, out);
        });

        std::vector<std::pair<std::string, DegreeSummary>> ego_rows;
        for (const Digraph& net : parts) ego_rows.emplace_back(net.label(), summarize(net));
        ego_rows.emplace_back(aggregated_ego_->label(), summarize(*aggregated_ego_));
        ego_rows.emplace_back(expanded_ego_->label(), summarize(*expanded_ego_));
        write_artifact("networks/ego_summary.csv", [&](std::ostream& out) {
            write_network_summary_csv(ego_rows, out);
        });

        const auto top_n =
            static_cast<std::size_t>(config_.get_int("netbuild", "top_active_n", 1000));
        const TopActiveBreakdown top_out =
            top_active_breakdown(*aggregated_ego_, Direction::out, top_n);
        const TopActiveBreakdown top_in =
            top_active_breakdown(*aggregated_ego_, Direction::in, top_n);
        write_artifact("networks/top_out.csv",
                       [&](std::ostream& out) { write_top_active_csv(top_out, "out", out); });
        write_artifact("networks/top_in.csv",
                       [&](std::ostream& out) { write_top_active_csv(top_in, "in", out); });

        if (config_.get_bool("netbuild", "export_edge_lists", true)) {
            for (const Digraph& net : *category_nets_) {
                write_artifact("networks/edges/category_" + net.label() + ".csv",
                               [&](std::ostream& out) { write_edge_csv(net, out); });
            }
            for (const Digraph& net : parts) {
                write_artifact("networks/edges/ego_" + net.label() + ".csv",
                               [&](std::ostream& out) { write_edge_csv(net, out); });
            }
            write_artifact("networks/edges/ego_aggregated.csv", [&](std::ostream& out) {
                write_edge_csv(*aggregated_ego_, out);
            });
            write_artifact("networks/edges/ego_expanded.csv", [&](std::ostream& out) {
                write_edge_csv(*expanded_ego_, out);
            });
        }
        if (config_.get_bool("netbuild", "export_dot", true)) {
            const std::vector<std::string> agg_colors = status_node_colors(*aggregated_ego_);
            write_artifact("networks/ego_aggregated.dot", [&](std::ostream& out) {
                write_dot(*aggregated_ego_, out, &agg_colors);
            });
            const std::vector<std::string> exp_colors = status_node_colors(*expanded_ego_);
            write_artifact("networks/ego_expanded.dot", [&](std::ostream& out) {
                write_dot(*expanded_ego_, out, &exp_colors);
            });
        }

        manifest_.add_counter("netbuild", "aggregated_nodes", aggregated_ego_->num_nodes());
        manifest_.add_counter("netbuild", "aggregated_edges", aggregated_ego_->num_edges());
        manifest_.add_counter("netbuild", "expanded_nodes", expanded_ego_->num_nodes());
        manifest_.add_counter("netbuild", "expanded_edges", expanded_ego_->num_edges());
    });
    netbuild_done_ = true;
}

// --- degstats ----------------------------------------------------------------

void Pipeline::degstats() {
    if (degstats_done_) return;
    require_netbuild();
    run_stage("degstats", [&] {
        const auto realizations = static_cast<std::size_t>(config_.get_int(
            "degstats", "realizations", static_cast<std::int64_t>(kDefaultDegreeRealizations)));
        const double alpha = config_.get_double("degstats", "alpha", 0.05);
        const std::uint64_t seed = stage_seed(seed_, kTagDegstats);
        manifest_.add_stage_seed("degstats", seed);

        std::vector<std::string> labels;
        for (const Digraph& net : *category_nets_) labels.push_back(net.label());

        std::vector<DegreeSampleVector> all;
        std::array<DegreeSampleVector, kAccountStatusCount> out_vectors;
        std::array<DegreeSampleVector, kAccountStatusCount> in_vectors;
        for (int g = 0; g < kAccountStatusCount; ++g) {
            out_vectors[g] = sample_group_degrees(*category_nets_, static_cast<AccountStatus>(g),
                                                  Direction::out, realizations, seed);
            in_vectors[g] = sample_group_degrees(*category_nets_, static_cast<AccountStatus>(g),
                                                 Direction::in, realizations, seed);
            all.push_back(out_vectors[g]);
            all.push_back(in_vectors[g]);
        }
        write_artifact("degstats/sampled_degrees.csv", [&](std::ostream& out) {
            write_degree_samples_csv(all, labels, out);
        });

        const KsMatrix ks_out = pairwise_ks_heatmap(out_vectors, alpha);
        const KsMatrix ks_in = pairwise_ks_heatmap(in_vectors, alpha);
        write_artifact("degstats/ks_out.csv",
                       [&](std::ostream& out) { write_ks_matrix_csv(ks_out, out); });
        write_artifact("degstats/ks_in.csv",
                       [&](std::ostream& out) { write_ks_matrix_csv(ks_in, out); });
    });
    degstats_done_ = true;
}

// --- stance -------------------------------------------------------------------

void Pipeline::stance() {
    if (stance_done_) return;
    require_netbuild();
    run_stage("stance", [&] {
        const bool expand = config_.get_bool("stance", "expand_lexicon", true);
        const auto min_count =
            static_cast<int>(config_.get_int("stance", "expansion_min_count", 10));
        active_lexicon_ =
            expand ? expand_lexicon(*corpus_, seed_lexicon_, min_count) : seed_lexicon_;
        manifest_.add_counter("stance", "lexicon_seeds", seed_lexicon_.size());
        manifest_.add_counter("stance", "lexicon_active", active_lexicon_.size());

        profiles_ = score_users(*corpus_, active_lexicon_);

        const std::string scheme_name = config_.get_string("stance", "scheme", "per_side");
        ClassScheme scheme;
        if (scheme_name == "per_side") {
            scheme = ClassScheme::per_side;
        } else if (scheme_name == "whole_distribution") {
            scheme = ClassScheme::whole_distribution;
        } else {
            throw ValidationError("stance.scheme must be per_side or whole_distribution, got '" +
                                  scheme_name + "'");
        }

        const std::string population = config_.get_string("stance", "population", "ego");
        std::vector<char> include;
        const std::vector<char>* include_ptr = nullptr;
        if (population == "ego" || population == "expanded") {
            const Digraph& graph = population == "ego" ? *aggregated_ego_ : *expanded_ego_;
            include.assign(corpus_->users.size(), 0);
            for (std::uint32_t node = 0; node < graph.num_nodes(); ++node)
                include[graph.user_of(node)] = 1;
            include_ptr = &include;
        } else if (population != "all") {
            throw ValidationError("stance.population must be ego, expanded, or all, got '" +
                                  population + "'");
        }

        classification_ = classify_users(profiles_, scheme, include_ptr);
        for (const std::string& w : classification_.thresholds.warnings) warn("stance", w);

        const ClassByStatus by_status = class_by_status(classification_, statuses_.by_user);
        const std::array<double, kSupportClassCount> shares = class_shares(classification_);

        write_artifact("stance/scores.csv", [&](std::ostream& out) {
            write_stance_scores_csv(profiles_, classification_, *corpus_, out);
        });
        write_artifact("stance/class_by_status.csv",
                       [&](std::ostream& out) { write_class_by_status_csv(by_status, out); });
        write_artifact("stance/class_shares.csv",
                       [&](std::ostream& out) { write_class_shares_csv(shares, out); });
    });
    stance_done_ = true;
}

// --- community -----------------------------------------------------------------

void Pipeline::run_community_for(const Digraph& graph, const std::string& tag,
                                 std::uint64_t seed) {
    manifest_.add_stage_seed("community_" + tag, seed);
    const UndirectedGraph undirected = UndirectedGraph::from_digraph(graph);
    const std::vector<std::uint32_t> lcc_nodes = largest_component_nodes(undirected);
    const UndirectedGraph lcc = induced_subgraph(undirected, lcc_nodes);
    manifest_.add_counter("community", tag + "_lcc_nodes", lcc.num_nodes());

    if (lcc.num_nodes() == 0) {
        warn("community", "graph '" + tag + "' is empty; community detection skipped");
        write_artifact("community/" + tag + "_sweep.csv",
                       [&](std::ostream& out) { write_partition_sweep_csv({}, out); });
        write_artifact("community/" + tag + "_membership.csv",
                       [&](std::ostream& out) { out << "user_id,community\n"; });
        write_artifact("community/" + tag + "_profiles.csv",
                       [&](std::ostream& out) { write_community_profiles_csv({}, out); });
        return;
    }

    const std::vector<double> grid =
        resolution_grid(config_.get_double("community", "resolution_min", 0.2),
                        config_.get_double("community", "resolution_max", 3.0),
                        static_cast<int>(config_.get_int("community", "resolution_points", 15)));
    const int runs = static_cast<int>(config_.get_int("community", "runs_per_resolution", 20));
    const double min_share = config_.get_double("community", "min_profile_share", 0.10);

    const std::vector<Partition> sweep = detect(lcc, grid, runs, seed);
    const Partition& selected = select_partition(sweep);
    const std::vector<CommunityProfile> profiles =
        profile_communities(selected, lcc, graph, classification_, min_share);

    write_artifact("community/" + tag + "_sweep.csv",
                   [&](std::ostream& out) { write_partition_sweep_csv(sweep, out); });
    write_artifact("community/" + tag + "_membership.csv", [&](std::ostream& out) {
        write_partition_csv(selected, lcc, graph, out);
    });
    write_artifact("community/" + tag + "_profiles.csv", [&](std::ostream& out) {
        write_community_profiles_csv(profiles, out);
    });
}

void Pipeline::community() {
    if (community_done_) return;
    require_stance();
    run_stage("community", [&] {
        run_community_for(*aggregated_ego_, "ego", stage_seed(seed_, kTagCommunityEgo));
        if (config_.get_bool("community", "include_expanded", true))
            run_community_for(*expanded_ego_, "expanded",
                              stage_seed(seed_, kTagCommunityExpanded));
    });
    community_done_ = true;
}

// --- causal --------------------------------------------------------------------

void Pipeline::run_causal_scenario(AccountStatus seed_status, const std::string& tag,
                                   std::uint64_t seed) {
    manifest_.add_stage_seed("causal_" + tag, seed);
    const std::uint32_t users = corpus_->users.size();

    std::vector<ActivitySeries> series;
    {
        std::vector<char> member(users, 0);
        for (std::uint32_t u = 0; u < users; ++u)
            if (statuses_.by_user[u] == static_cast<std::uint8_t>(seed_status)) member[u] = 1;
        series.push_back({tag, bin_activity(*corpus_, member, false, nullptr)});
    }
    // Supporter-class series: verified / not_verified authors, official
    // clients only.
    static constexpr SupportClass kClassOrder[] = {SupportClass::weak_t, SupportClass::weak_c,
                                                   SupportClass::strong_t, SupportClass::strong_c,
                                                   SupportClass::undecided};
    for (SupportClass klass : kClassOrder) {
        std::vector<char> member(users, 0);
        for (std::uint32_t u = 0; u < users; ++u) {
            if (!classification_.included[u]) continue;
            if (classification_.klass[u] != static_cast<std::uint8_t>(klass)) continue;
            const std::uint8_t raw = statuses_.by_user[u];
            if (raw != static_cast<std::uint8_t>(AccountStatus::verified) &&
                raw != static_cast<std::uint8_t>(AccountStatus::not_verified))
                continue;
            member[u] = 1;
        }
        series.push_back({std::string(support_class_token(klass)),
                          bin_activity(*corpus_, member, true, &client_registry_)});
    }

    write_artifact("causal/" + tag + "_activity.csv",
                   [&](std::ostream& out) { write_activity_csv(series, out); });

    StlConfig stl_config;
    stl_config.inner_iterations = static_cast<int>(config_.get_int("causal", "stl_inner", 2));
    stl_config.outer_iterations = static_cast<int>(config_.get_int("causal", "stl_outer", 1));

    std::vector<std::string> names;
    std::vector<std::vector<double>> residuals;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (is_constant(series[i].bins)) {
            warn("causal", "scenario '" + tag + "': activity series '" + series[i].group +
                               "' is constant; excluded from causal analysis");
            continue;
        }
        StlDecomposition parts = stl_decompose(series[i].bins, kBinsPerDay, stl_config);
        if (i == 0) {
            write_artifact("causal/" + tag + "_seed_stl.csv", [&](std::ostream& out) {
                write_decomposition_csv(series[i].bins, parts, out);
            });
        }
        names.push_back(series[i].group);
        residuals.push_back(std::move(parts.remainder));
    }
    write_artifact("causal/" + tag + "_residuals.csv", [&](std::ostream& out) {
        write_residuals_csv(names, residuals, out);
    });
    if (names.size() < 2) {
        warn("causal", "scenario '" + tag +
                           "': fewer than two usable activity series; discovery skipped");
        return;
    }

    DiscoveryConfig dconf;
    dconf.tau_max = static_cast<int>(config_.get_int("causal", "tau_max", 18));
    dconf.alpha = config_.get_double("causal", "alpha", 0.05);
    dconf.max_conds = static_cast<int>(config_.get_int("causal", "max_conds", 3));
    const DiscoveryResult discovery = discover_parents(residuals, dconf);
    for (const std::string& w : discovery.warnings) warn("causal", "scenario '" + tag + "': " + w);

    EffectConfig econf;
    econf.tau_max = dconf.tau_max;
    econf.bootstrap_stderr = config_.get_bool("causal", "bootstrap_stderr", false);
    econf.bootstrap_samples =
        static_cast<int>(config_.get_int("causal", "bootstrap_samples", 200));
    econf.seed = seed;
    const EffectMatrix effects = estimate_effects(residuals, discovery, econf);

    const double coverage = config_.get_double("causal", "coverage", 0.75);
    const bool diag_pool = config_.get_bool("causal", "include_diagonal_pool", true);
    const ThresholdResult selection = threshold_links(effects, coverage, diag_pool);

    write_artifact("causal/" + tag + "_parents.csv",
                   [&](std::ostream& out) { write_parents_csv(discovery, names, out); });
    write_artifact("causal/" + tag + "_effects.csv",
                   [&](std::ostream& out) { write_effect_matrix_csv(effects, names, out); });
    write_artifact("causal/" + tag + "_effects_table.csv", [&](std::ostream& out) {
        write_effect_table_csv(effects, selection, names, out);
    });
    write_artifact("causal/" + tag + "_links.csv", [&](std::ostream& out) {
        write_selected_links_csv(selection, names, out);
    });

    std::vector<std::string> colors;
    for (const std::string& name : names) {
        if (name == tag) colors.emplace_back("orange");
        else if (name == "weak_t") colors.emplace_back("lightcoral");
        else if (name == "weak_c") colors.emplace_back("lightskyblue");
        else if (name == "strong_t") colors.emplace_back("firebrick");
        else if (name == "strong_c") colors.emplace_back("royalblue");
        else colors.emplace_back("gray80");
    }
    write_artifact("causal/" + tag + "_graph.dot", [&](std::ostream& out) {
        export_causal_graph(effects, selection, names, &colors, out);
    });
}

void Pipeline::causal() {
    if (causal_done_) return;
    require_stance();
    run_stage("causal", [&] {
        run_causal_scenario(AccountStatus::ira, "ira", stage_seed(seed_, kTagCausalIra));
        run_causal_scenario(AccountStatus::suspended, "suspended",
                            stage_seed(seed_, kTagCausalSuspended));
    });
    causal_done_ = true;
}

// --- reports ---------------------------------------------------------------------

void Pipeline::reports() {
    if (reports_done_) return;
    require_ingest();
    run_stage("reports", [&] {
        const StatusShareTable categories =
            report_category_shares(*corpus_, statuses_, category_map_);
        const StatusShareTable nonofficial =
            report_nonofficial_shares(*corpus_, statuses_, client_registry_, category_map_);
        const StatusShareTable originals =
            report_original_shares(*corpus_, statuses_, category_map_);
        write_artifact("reports/category_shares.csv",
                       [&](std::ostream& out) { write_status_share_csv(categories, out); });
        write_artifact("reports/nonofficial_shares.csv",
                       [&](std::ostream& out) { write_status_share_csv(nonofficial, out); });
        write_artifact("reports/original_shares.csv",
                       [&](std::ostream& out) { write_status_share_csv(originals, out); });
    });
    reports_done_ = true;
}

void Pipeline::run_all() {
    ingest();
    netbuild();
    degstats();
    stance();
    community();
    causal();
    reports();
}

void Pipeline::finalize() {
    if (finalized_) return;
    manifest_.write(out_dir_ + "/manifest.json");
    timings_.write(out_dir_ + "/timings.json");
    finalized_ = true;
}

}  // namespace cfx
