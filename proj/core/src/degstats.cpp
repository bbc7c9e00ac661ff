// campaign-forensics: degree sampling and KS comparison across category networks.
// SPDX-License-Identifier: MIT
#include "cfx/analysis/degstats.hpp"

#include <cmath>
#include <string>

#include "cfx/util/error.hpp"
#include "cfx/util/rng.hpp"

namespace cfx {

namespace {

/// Degrees of all nodes of one status group in one network.
std::vector<double> group_degrees(const Digraph& net, AccountStatus group, Direction direction) {
    std::vector<double> degrees;
    const auto wanted = static_cast<std::uint8_t>(group);
    for (std::uint32_t node = 0; node < net.num_nodes(); ++node) {
        if (net.node_status()[node] != wanted) continue;
        degrees.push_back(static_cast<double>(direction == Direction::out ? net.out_degree(node)
                                                                          : net.in_degree(node)));
    }
    return degrees;
}

double mean_of(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

}  // namespace

DegreeSampleVector sample_group_degrees(const std::array<Digraph, kNewsCategoryCount>& nets,
                                        AccountStatus group, Direction direction,
                                        std::size_t realizations, std::uint64_t seed) {
    DegreeSampleVector out;
    out.group = group;
    out.direction = direction;
    out.realizations = realizations;
    out.values.resize(kNewsCategoryCount, 0.0);
    out.stderrs.resize(kNewsCategoryCount, 0.0);
    out.sample_sizes.resize(kNewsCategoryCount, 0);

    for (int c = 0; c < kNewsCategoryCount; ++c) {
        const Digraph& net = nets[c];
        const std::vector<double> seed_group_degrees =
            group_degrees(net, AccountStatus::ira, direction);
        const std::size_t sample_size = seed_group_degrees.size();
        out.sample_sizes[c] = sample_size;

        if (group == AccountStatus::ira) {
            // Degenerate case: population equals the sample, no randomness.
            out.values[c] = mean_of(seed_group_degrees);
            out.stderrs[c] = 0.0;
            continue;
        }
        if (sample_size == 0) {
            out.values[c] = 0.0;
            out.stderrs[c] = 0.0;
            continue;
        }

        const std::vector<double> population = group_degrees(net, group, direction);
        if (population.size() < sample_size) {
            throw ValidationError(
                "group '" + std::string(account_status_token(group)) + "' has " +
                std::to_string(population.size()) + " members in network '" + net.label() +
                "' but the sample size is " + std::to_string(sample_size));
        }

        // One derived RNG stream per (group, direction, network) cell keeps
        // cells independent of evaluation order.
        const std::uint64_t stream =
            (static_cast<std::uint64_t>(group) << 32) |
            (static_cast<std::uint64_t>(direction) << 16) | static_cast<std::uint64_t>(c);
        Rng rng = Rng::derive(seed, stream);

        std::vector<double> realization_means;
        realization_means.reserve(realizations);
        for (std::size_t r = 0; r < realizations; ++r) {
            const auto draw =
                rng.sample_without_replacement(static_cast<std::uint32_t>(population.size()),
                                               static_cast<std::uint32_t>(sample_size));
            double s = 0.0;
            for (std::uint32_t idx : draw) s += population[idx];
            realization_means.push_back(s / static_cast<double>(sample_size));
        }
        const double mean = mean_of(realization_means);
        double var = 0.0;
        if (realization_means.size() > 1) {
            for (double m : realization_means) var += (m - mean) * (m - mean);
            var /= static_cast<double>(realization_means.size() - 1);
        }
        out.values[c] = mean;
        out.stderrs[c] = std::sqrt(var / static_cast<double>(realizations));
    }
    return out;
}

KsMatrix pairwise_ks_heatmap(const std::array<DegreeSampleVector, kAccountStatusCount>& vectors,
                             double alpha) {
    KsMatrix m;
    for (int i = 0; i < kAccountStatusCount; ++i) {
        m.cells[i][i] = KsResult{0.0, 1.0, false, true};
        for (int j = i + 1; j < kAccountStatusCount; ++j) {
            const KsResult r = ks_two_sample(vectors[i].values, vectors[j].values, alpha);
            m.cells[i][j] = r;
            m.cells[j][i] = r;
        }
    }
    return m;
}

}  // namespace cfx
