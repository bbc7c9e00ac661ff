// campaign-forensics: run manifest (provenance) and stage wall-time record.
// SPDX-License-Identifier: MIT
//
// The manifest captures everything that determines a run's outputs — config
// hash, input digests, seeds, parameter values, artifact digests — and is
// byte-identical across runs with identical inputs, configuration, and
// seeds.  Wall times are genuinely nondeterministic, so they live in a
// separate timings file that is not part of the identity contract.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cfx/util/config.hpp"

namespace cfx {

class RunManifest {
public:
    void set_tool(const std::string& name, const std::string& version);

    /// Record the effective configuration.  `io.out_dir` is dropped before
    /// hashing so runs into different directories stay comparable.
    void set_config(const Config& config);

    void set_seed(std::uint64_t seed);
    void set_threads(int threads);

    /// Record an input file under a role name ("corpus", "statuses", ...).
    /// Stores the basename and the SHA-256 of the contents.
    void add_input(const std::string& role, const std::string& path);

    /// Seed actually used by a randomized stage.
    void add_stage_seed(const std::string& stage, std::uint64_t seed);

    /// Deterministic per-stage counters (e.g. ingest line statistics).
    void add_counter(const std::string& stage, const std::string& name, std::uint64_t value);

    /// Record an artifact by out_dir-relative path; hashes the file.
    void add_artifact(const std::string& relative_path, const std::string& full_path);

    void add_warning(const std::string& stage, const std::string& text);

    /// Canonical JSON: keys sorted, two-space indent, trailing newline.
    std::string to_json() const;
    void write(const std::string& path) const;

private:
    std::string tool_name_;
    std::string tool_version_;
    std::string config_sha256_;
    std::map<std::string, std::map<std::string, std::string>> parameters_;
    std::uint64_t seed_ = 0;
    int threads_ = 0;
    std::map<std::string, std::pair<std::string, std::string>> inputs_;  // role → (file, sha)
    std::map<std::string, std::uint64_t> stage_seeds_;
    std::map<std::string, std::map<std::string, std::uint64_t>> counters_;
    std::map<std::string, std::string> artifacts_;  // relpath → sha
    std::vector<std::string> warnings_;
};

/// Per-stage wall times; a separate artifact because they vary run to run.
class StageTimings {
public:
    void add(const std::string& stage, double seconds);
    std::string to_json() const;
    void write(const std::string& path) const;

private:
    std::vector<std::pair<std::string, double>> stages_;
};

}  // namespace cfx
