// campaign-forensics: synthetic corpus bundle writer.
// SPDX-License-Identifier: MIT
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cfx/corpus/generator.hpp"
#include "cfx/util/error.hpp"

int main(int argc, char** argv) {
    CLI::App app{"write a seeded synthetic corpus bundle (corpus + side tables)"};

    std::string out_dir;
    app.add_option("--out-dir", out_dir, "directory for the bundle")->required();
    std::string profile = "fixture";
    app.add_option("--profile", profile, "fixture | smoke")
        ->check(CLI::IsMember({"fixture", "smoke"}))
        ->capture_default_str();
    std::uint64_t seed = 0;
    auto* seed_opt = app.add_option("--seed", seed, "generator seed");
    std::size_t tweets = 0;
    auto* tweets_opt = app.add_option("--tweets", tweets, "row count (fixture profile)");
    std::size_t edges = 10'000'000;
    app.add_option("--edges", edges, "interaction rows to aim for (smoke profile)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    cfx::GeneratorConfig config = profile == "smoke"
                                      ? cfx::GeneratorConfig::smoke_profile(edges)
                                      : cfx::GeneratorConfig::fixture_profile();
    if (seed_opt->count() > 0) config.seed = seed;
    if (tweets_opt->count() > 0) config.tweets = tweets;

    try {
        const cfx::GeneratorOutput result = cfx::generate_corpus_files(config, out_dir);
        std::cout << "corpus: " << result.corpus_path << "\nstatuses: " << result.statuses_path
                  << "\ncategories: " << result.categories_path
                  << "\nclients: " << result.clients_path
                  << "\nlexicon: " << result.lexicon_path << "\nlines: " << result.lines_written
                  << " (valid tweets: " << result.valid_tweets << ")\n";
        return 0;
    } catch (const cfx::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(e.code());
    }
}
