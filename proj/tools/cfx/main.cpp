// campaign-forensics: pipeline command-line driver.
// SPDX-License-Identifier: MIT
//
// Subcommands map one-to-one onto pipeline stages (each runs its missing
// prerequisites), plus run-all.  Exit codes: 0 success, 2 validation,
// 3 I/O, 4 numerical.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cfx/pipeline/pipeline.hpp"
#include "cfx/util/config.hpp"
#include "cfx/util/error.hpp"

namespace {

struct CliOptions {
    std::string config_path = "configs/default.ini";
    std::optional<std::uint64_t> seed;
    std::optional<int> threads;
    std::optional<std::string> out_dir;
};

int run(const std::string& stage, const CliOptions& options) {
    cfx::Config config = cfx::Config::load(options.config_path);
    cfx::PipelineOptions pipeline_options;
    pipeline_options.seed = options.seed;
    pipeline_options.threads = options.threads;
    pipeline_options.out_dir = options.out_dir;
    cfx::Pipeline pipeline(std::move(config), pipeline_options);

    if (stage == "ingest-check") {
        pipeline.ingest();
        const cfx::IngestReport& r = pipeline.ingest_report();
        std::cout << "lines: " << r.lines << "\naccepted: " << r.accepted
                  << "\nmalformed: " << r.malformed << " (duplicates: " << r.duplicate_ids
                  << ")\noutside window: " << r.outside_window << '\n';
        if (!r.first_malformed.empty())
            std::cout << "first malformed: " << r.first_malformed << '\n';
    } else if (stage == "build-nets") {
        pipeline.netbuild();
    } else if (stage == "degstats") {
        pipeline.degstats();
    } else if (stage == "stance") {
        pipeline.stance();
    } else if (stage == "community") {
        pipeline.community();
    } else if (stage == "causal") {
        pipeline.causal();
    } else if (stage == "report") {
        pipeline.reports();
    } else {  // run-all
        pipeline.run_all();
    }
    pipeline.finalize();
    std::cout << "done; artifacts in " << pipeline.out_dir() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"campaign-forensics analysis pipeline"};
    app.require_subcommand(1);

    CliOptions options;
    app.add_option("--config", options.config_path, "configuration file (INI)")
        ->envname("CFX_CONFIG")
        ->capture_default_str();
    std::uint64_t seed_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value, "override run seed");
    int threads_value = 0;
    auto* threads_opt = app.add_option("--threads", threads_value, "worker thread cap (0 = auto)");
    std::string out_dir_value;
    auto* out_dir_opt = app.add_option("--out-dir", out_dir_value, "output directory");

    static constexpr const char* kStages[] = {"ingest-check", "build-nets", "degstats", "stance",
                                              "community",    "causal",     "report",   "run-all"};
    static constexpr const char* kDescriptions[] = {
        "load and validate the corpus and side tables",
        "build category and seed interaction networks",
        "sampled group degree means and pairwise distribution tests",
        "hashtag stance scores and supporter classes",
        "multi-resolution community detection on the seed networks",
        "activity deseasonalization, causal discovery, effect networks",
        "per-status share tables",
        "every stage in order"};
    for (std::size_t i = 0; i < std::size(kStages); ++i)
        app.add_subcommand(kStages[i], kDescriptions[i]);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (seed_opt->count() > 0) options.seed = seed_value;
    if (threads_opt->count() > 0) options.threads = threads_value;
    if (out_dir_opt->count() > 0) options.out_dir = out_dir_value;

    const std::string stage = app.get_subcommands().front()->get_name();
    try {
        return run(stage, options);
    } catch (const cfx::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
