// campaign-forensics: staged analysis pipeline with provenance.
// SPDX-License-Identifier: MIT
//
// Stages run in dependency order — ingest → netbuild → {degstats, stance} →
// community → causal → reports — each writing its plot-ready CSV artifacts
// under the output directory and registering them in the run manifest.
// Every stage entry point runs its missing prerequisites first, so the CLI
// subcommands map one-to-one onto these methods.  Any stage failure is
// rethrown with the stage name prefixed, preserving the error class (and
// therefore the process exit code).
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cfx/analysis/community.hpp"
#include "cfx/analysis/degstats.hpp"
#include "cfx/analysis/stance.hpp"
#include "cfx/corpus/ingest.hpp"
#include "cfx/corpus/records.hpp"
#include "cfx/corpus/tables.hpp"
#include "cfx/graph/digraph.hpp"
#include "cfx/graph/netbuild.hpp"
#include "cfx/pipeline/manifest.hpp"
#include "cfx/util/config.hpp"

namespace cfx {

inline constexpr const char* kToolName = "cfx";
inline constexpr const char* kToolVersion = "1.0.0";

/// Command-line overrides applied on top of the configuration file.
struct PipelineOptions {
    std::optional<std::uint64_t> seed;
    std::optional<int> threads;
    std::optional<std::string> out_dir;
};

class Pipeline {
public:
    Pipeline(Config config, const PipelineOptions& options = {});
    ~Pipeline();

    // Stage entry points (idempotent; prerequisites run automatically).
    void ingest();
    void netbuild();
    void degstats();
    void stance();
    void community();
    void causal();
    void reports();

    /// All stages in order.
    void run_all();

    /// Write manifest.json and timings.json; call once after the last stage.
    void finalize();

    const std::string& out_dir() const { return out_dir_; }
    const IngestReport& ingest_report() const { return ingest_report_; }
    const Corpus& corpus() const { return *corpus_; }
    const RunManifest& manifest() const { return manifest_; }

private:
    void require_ingest();
    void require_netbuild();
    void require_stance();

    void run_stage(const char* name, const std::function<void()>& body);
    void write_artifact(const std::string& relative, const std::function<void(std::ostream&)>& w);
    void warn(const std::string& stage, const std::string& text);
    void run_community_for(const Digraph& graph, const std::string& tag, std::uint64_t seed);
    void run_causal_scenario(AccountStatus seed_status, const std::string& tag,
                             std::uint64_t seed);

    Config config_;
    std::string out_dir_;
    std::uint64_t seed_ = 0;
    int threads_ = 0;

    RunManifest manifest_;
    StageTimings timings_;

    // Stage products.
    bool ingest_done_ = false;
    bool netbuild_done_ = false;
    bool degstats_done_ = false;
    bool stance_done_ = false;
    bool community_done_ = false;
    bool causal_done_ = false;
    bool reports_done_ = false;
    bool finalized_ = false;

    std::unique_ptr<Corpus> corpus_;
    IngestReport ingest_report_;
    StatusTable status_table_;
    CategoryMap category_map_;
    ClientRegistry client_registry_;
    StanceLexicon seed_lexicon_;
    ResolvedStatuses statuses_;

    std::unique_ptr<std::array<Digraph, kNewsCategoryCount>> category_nets_;
    std::unique_ptr<Digraph> aggregated_ego_;
    std::unique_ptr<Digraph> expanded_ego_;

    StanceLexicon active_lexicon_;
    StanceProfiles profiles_;
    Classification classification_;
};

/// Derived child seed for a named stage (stable, collision-scattered).
std::uint64_t stage_seed(std::uint64_t base, std::uint64_t tag);

}  // namespace cfx
