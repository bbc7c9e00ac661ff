// campaign-forensics: CSV report writers and per-status share tables.
// SPDX-License-Identifier: MIT
#include "cfx/pipeline/report.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "cfx/util/csv.hpp"
#include "cfx/util/error.hpp"

namespace cfx {

namespace {

std::string_view status_token(int s) { return account_status_token(static_cast<AccountStatus>(s)); }

std::string_view class_token(int c) { return support_class_token(static_cast<SupportClass>(c)); }

/// Record's status, or kAbsent.
std::uint8_t record_status(const Corpus& corpus, const ResolvedStatuses& statuses, std::size_t i) {
    return statuses.by_user[corpus.author[i]];
}

}  // namespace

std::string_view account_status_label(AccountStatus status) {
    switch (status) {
        case AccountStatus::suspended: return "Suspended";
        case AccountStatus::not_found: return "Not found";
        case AccountStatus::not_verified: return "Not verified";
        case AccountStatus::verified: return "Verified";
        case AccountStatus::ira: return "IRA";
    }
    return "?";
}

void write_network_summary_csv(const std::vector<std::pair<std::string, DegreeSummary>>& rows,
                               std::ostream& out) {
    out << "network,n,e,mean_degree,n_seed,seed_mean_out,seed_mean_in\n";
    for (const auto& [label, s] : rows) {
        out << csv_escape(label) << ',' << s.n << ',' << s.e << ','
            << format_double(s.mean_half_degree) << ',' << s.n_ira << ','
            << format_double(s.ira_mean_out) << ',' << format_double(s.ira_mean_in) << '\n';
    }
}

void write_top_active_csv(const TopActiveBreakdown& top, std::string_view direction_label,
                          std::ostream& out) {
    out << "direction,status,count,share_percent\n";
    for (AccountStatus s : kStatusPresentationOrder) {
        const int i = static_cast<int>(s);
        out << direction_label << ',' << status_token(i) << ',' << top.counts[i] << ','
            << format_double(top.shares[i]) << '\n';
    }
    out << direction_label << ",unknown," << top.unknown_count << ','
        << format_double(top.unknown_share) << '\n';
}

void write_degree_samples_csv(const std::vector<DegreeSampleVector>& samples,
                              const std::vector<std::string>& network_labels, std::ostream& out) {
    out << "group,direction,network,mean_degree,stderr,sample_size,realizations\n";
    for (const DegreeSampleVector& v : samples) {
        for (std::size_t c = 0; c < v.values.size(); ++c) {
            out << account_status_token(v.group) << ','
                << (v.direction == Direction::out ? "out" : "in") << ','
                << csv_escape(network_labels[c]) << ',' << format_double(v.values[c]) << ','
                << format_double(v.stderrs[c]) << ',' << v.sample_sizes[c] << ','
                << v.realizations << '\n';
        }
    }
}

void write_ks_matrix_csv(const KsMatrix& matrix, std::ostream& out) {
    out << "group_a,group_b,d,p_value,exact,reject\n";
    for (int a = 0; a < kAccountStatusCount; ++a) {
        for (int b = 0; b < kAccountStatusCount; ++b) {
            const KsResult& r = matrix.cells[a][b];
            out << status_token(a) << ',' << status_token(b) << ',' << format_double(r.d) << ','
                << format_double(r.p_value) << ',' << (r.exact ? 1 : 0) << ','
                << (r.reject ? 1 : 0) << '\n';
        }
    }
}

void write_stance_scores_csv(const StanceProfiles& profiles, const Classification& classes,
                             const Corpus& corpus, std::ostream& out) {
    out << "user_id,pro_t,pro_c,score,class\n";
    // Canonical order: by user-id string, matching the graph node order.
    std::vector<std::uint32_t> users;
    users.reserve(profiles.size());
    for (std::uint32_t u = 0; u < profiles.size(); ++u)
        if (classes.included[u]) users.push_back(u);
    std::sort(users.begin(), users.end(), [&](std::uint32_t a, std::uint32_t b) {
        return corpus.users.str(a) < corpus.users.str(b);
    });
    for (std::uint32_t u : users) {
        out << csv_escape(std::string(corpus.users.str(u))) << ',' << profiles.pro_t[u] << ','
            << profiles.pro_c[u] << ',' << profiles.score(u) << ','
            << class_token(classes.klass[u]) << '\n';
    }
}

void write_class_by_status_csv(const ClassByStatus& table, std::ostream& out) {
    out << "status,total";
    for (int c = 0; c < kSupportClassCount; ++c) out << ',' << class_token(c);
    out << '\n';
    for (AccountStatus s : kStatusPresentationOrder) {
        const int i = static_cast<int>(s);
        out << status_token(i) << ',' << table.totals[i];
        for (int c = 0; c < kSupportClassCount; ++c)
            out << ',' << format_double(table.percent[i][c]);
        out << '\n';
    }
}

void write_class_shares_csv(const std::array<double, kSupportClassCount>& shares,
                            std::ostream& out) {
    out << "class,share_percent\n";
    for (int c = 0; c < kSupportClassCount; ++c)
        out << class_token(c) << ',' << format_double(shares[c]) << '\n';
}

void write_partition_sweep_csv(const std::vector<Partition>& sweep, std::ostream& out) {
    out << "resolution,stability,modularity,communities\n";
    for (const Partition& p : sweep) {
        std::uint32_t communities = 0;
        for (std::uint32_t c : p.assignment) communities = std::max(communities, c + 1);
        out << format_double(p.resolution) << ',' << format_double(p.stability) << ','
            << format_double(p.modularity) << ',' << communities << '\n';
    }
}

void write_partition_csv(const Partition& partition, const UndirectedGraph& lcc,
                         const Digraph& source_graph, std::ostream& out) {
    out << "user_id,community\n";
    // LCC vertices are in ascending source-node order; source nodes are in
    // canonical user-string order already.
    for (std::uint32_t v = 0; v < lcc.num_nodes(); ++v) {
        out << csv_escape(source_graph.user_str(lcc.orig_node[v])) << ','
            << partition.assignment[v] << '\n';
    }
}

void write_community_profiles_csv(const std::vector<CommunityProfile>& profiles,
                                  std::ostream& out) {
    out << "community,nodes,seed_nodes";
    for (int c = 0; c < kSupportClassCount; ++c) out << ',' << class_token(c) << "_percent";
    out << ",unclassified";
    for (int s = 0; s < kAccountStatusCount; ++s) out << ',' << status_token(s) << "_percent";
    out << ",unknown_status_percent\n";
    for (const CommunityProfile& p : profiles) {
        out << p.community << ',' << p.nodes << ',' << p.ira_nodes;
        for (int c = 0; c < kSupportClassCount; ++c) out << ',' << format_double(p.class_percent[c]);
        out << ',' << p.unclassified;
        for (int s = 0; s < kAccountStatusCount; ++s)
            out << ',' << format_double(p.status_percent[s]);
        out << ',' << format_double(p.unknown_status_percent) << '\n';
    }
}

void write_activity_csv(const std::vector<ActivitySeries>& series, std::ostream& out) {
    out << "bin";
    for (const ActivitySeries& s : series) out << ',' << csv_escape(s.group);
    out << '\n';
    const std::size_t bins = series.empty() ? 0 : series.front().bins.size();
    for (std::size_t b = 0; b < bins; ++b) {
        out << b;
        for (const ActivitySeries& s : series) out << ',' << format_double(s.bins[b]);
        out << '\n';
    }
}

void write_decomposition_csv(const std::vector<double>& observed, const StlDecomposition& parts,
                             std::ostream& out) {
    out << "bin,observed,trend,seasonal,remainder\n";
    for (std::size_t b = 0; b < observed.size(); ++b) {
        out << b << ',' << format_double(observed[b]) << ',' << format_double(parts.trend[b])
            << ',' << format_double(parts.seasonal[b]) << ','
            << format_double(parts.remainder[b]) << '\n';
    }
}

void write_residuals_csv(const std::vector<std::string>& names,
                         const std::vector<std::vector<double>>& residuals, std::ostream& out) {
    out << "bin";
    for (const std::string& name : names) out << ',' << csv_escape(name);
    out << '\n';
    const std::size_t bins = residuals.empty() ? 0 : residuals.front().size();
    for (std::size_t b = 0; b < bins; ++b) {
        out << b;
        for (const auto& series : residuals) out << ',' << format_double(series[b]);
        out << '\n';
    }
}

void write_parents_csv(const DiscoveryResult& discovery, const std::vector<std::string>& names,
                       std::ostream& out) {
    out << "target,source,lag,strength\n";
    for (const ParentSet& set : discovery.parents) {
        for (std::size_t i = 0; i < set.parents.size(); ++i) {
            const LaggedLink& link = set.parents[i];
            out << csv_escape(names[set.target]) << ',' << csv_escape(names[link.source]) << ','
                << link.lag << ',' << format_double(set.strength[i]) << '\n';
        }
    }
}

void write_effect_matrix_csv(const EffectMatrix& matrix, const std::vector<std::string>& names,
                             std::ostream& out) {
    out << "source,target,value,stderr,lag\n";
    for (std::size_t s = 0; s < matrix.size(); ++s) {
        for (std::size_t t = 0; t < matrix.size(); ++t) {
            out << csv_escape(names[s]) << ',' << csv_escape(names[t]) << ','
                << format_double(matrix.value(s, t)) << ',' << format_double(matrix.se(s, t))
                << ',' << matrix.lag(s, t) << '\n';
        }
    }
}

void write_effect_table_csv(const EffectMatrix& matrix, const ThresholdResult& selection,
                            const std::vector<std::string>& names, std::ostream& out) {
    const auto selected = [&](std::size_t s, std::size_t t) {
        for (const SelectedLink& link : selection.links)
            if (link.source == s && link.target == t) return true;
        return false;
    };
    out << "target";
    for (const std::string& name : names) out << ',' << csv_escape(name);
    out << '\n';
    for (std::size_t t = 0; t < matrix.size(); ++t) {
        out << csv_escape(names[t]);
        for (std::size_t s = 0; s < matrix.size(); ++s) {
            const double v = matrix.value(s, t);
            std::string cell;
            if (v == 0.0 && s != t) {
                cell = "0";
            } else {
                cell = format_fixed(v, 2) + " +/- " + format_fixed(matrix.se(s, t), 3);
                if (selected(s, t)) cell += " *";
            }
            out << ',' << csv_escape(cell);
        }
        out << '\n';
    }
}

void write_selected_links_csv(const ThresholdResult& selection,
                              const std::vector<std::string>& names, std::ostream& out) {
    out << "source,target,value,threshold,covered_fraction\n";
    for (const SelectedLink& link : selection.links) {
        out << csv_escape(names[link.source]) << ',' << csv_escape(names[link.target]) << ','
            << format_double(link.value) << ',' << format_double(selection.threshold) << ','
            << format_double(selection.covered_fraction) << '\n';
    }
}

namespace {

enum class ShareMode { category, nonofficial, original };

StatusShareTable build_share_table(const Corpus& corpus, const ResolvedStatuses& statuses,
                                   const CategoryMap& categories, const ClientRegistry* registry,
                                   ShareMode mode) {
    StatusShareTable table;
    for (int c = 0; c < kNewsCategoryCount; ++c)
        table.columns.emplace_back(news_category_token(static_cast<NewsCategory>(c)));
    const bool with_overall = mode != ShareMode::category;
    if (with_overall) table.columns.emplace_back("overall");
    const std::size_t cols = table.columns.size();
    for (auto& row : table.percent) row.assign(cols, 0.0);

    // numerator/denominator per status per column.
    std::array<std::vector<double>, kAccountStatusCount> hits;
    std::array<std::vector<double>, kAccountStatusCount> totals;
    for (int s = 0; s < kAccountStatusCount; ++s) {
        hits[s].assign(cols, 0.0);
        totals[s].assign(cols, 0.0);
    }

    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const std::uint8_t raw = record_status(corpus, statuses, i);
        if (raw == ResolvedStatuses::kAbsent) continue;
        const int s = raw;
        table.row_tweets[s] += 1;

        const auto category = tag_news_category(corpus, i, categories);
        const bool flagged = [&] {
            switch (mode) {
                case ShareMode::category: return category.has_value();
                case ShareMode::nonofficial:
                    return !registry->is_official(
                        corpus.clients.str(corpus.client[i]));
                case ShareMode::original: return corpus.kind[i] == TweetKind::original;
            }
            return false;
        }();

        if (mode == ShareMode::category) {
            if (category) {
                const int c = static_cast<int>(*category);
                hits[s][c] += 1.0;
                totals[s][c] += 1.0;  // normalized below over all mapped tweets
            }
        } else {
            if (category) {
                const int c = static_cast<int>(*category);
                totals[s][c] += 1.0;
                if (flagged) hits[s][c] += 1.0;
            }
            totals[s][cols - 1] += 1.0;
            if (flagged) hits[s][cols - 1] += 1.0;
        }
    }

    for (int s = 0; s < kAccountStatusCount; ++s) {
        if (mode == ShareMode::category) {
            double mapped = 0.0;
            for (int c = 0; c < kNewsCategoryCount; ++c) mapped += hits[s][c];
            for (std::size_t c = 0; c < cols; ++c)
                table.percent[s][c] = mapped > 0.0 ? 100.0 * hits[s][c] / mapped : 0.0;
        } else {
            for (std::size_t c = 0; c < cols; ++c)
                table.percent[s][c] =
                    totals[s][c] > 0.0 ? 100.0 * hits[s][c] / totals[s][c] : 0.0;
        }
    }
    return table;
}

}  // namespace

StatusShareTable report_category_shares(const Corpus& corpus, const ResolvedStatuses& statuses,
                                        const CategoryMap& categories) {
    return build_share_table(corpus, statuses, categories, nullptr, ShareMode::category);
}

StatusShareTable report_nonofficial_shares(const Corpus& corpus, const ResolvedStatuses& statuses,
                                           const ClientRegistry& registry,
                                           const CategoryMap& categories) {
    return build_share_table(corpus, statuses, categories, &registry, ShareMode::nonofficial);
}

StatusShareTable report_original_shares(const Corpus& corpus, const ResolvedStatuses& statuses,
                                        const CategoryMap& categories) {
    return build_share_table(corpus, statuses, categories, nullptr, ShareMode::original);
}

void write_status_share_csv(const StatusShareTable& table, std::ostream& out) {
    out << "status,total";
    for (const std::string& column : table.columns) out << ',' << csv_escape(column);
    out << '\n';
    for (AccountStatus s : kStatusPresentationOrder) {
        const int i = static_cast<int>(s);
        out << status_token(i) << ',' << table.row_tweets[i];
        for (double value : table.percent[i]) out << ',' << format_double(value);
        out << '\n';
    }
}

void write_ingest_report_csv(const IngestReport& report, std::ostream& out) {
    out << "metric,value\n";
    out << "lines," << report.lines << '\n';
    out << "accepted," << report.accepted << '\n';
    out << "malformed," << report.malformed << '\n';
    out << "duplicate_ids," << report.duplicate_ids << '\n';
    out << "outside_window," << report.outside_window << '\n';
}

void write_csv_file(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    writer(out);
    if (!out) throw IoError("failed while writing: " + path);
}

}  // namespace cfx
