// campaign-forensics: run manifest and timing serialization.
// SPDX-License-Identifier: MIT
#include "cfx/pipeline/manifest.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "cfx/util/digest.hpp"
#include "cfx/util/error.hpp"

namespace cfx {

namespace {

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    out << text;
    if (!out) throw IoError("failed while writing: " + path);
}

}  // namespace

void RunManifest::set_tool(const std::string& name, const std::string& version) {
    tool_name_ = name;
    tool_version_ = version;
}

void RunManifest::set_config(const Config& config) {
    parameters_.clear();
    for (const auto& [section, entries] : config.sections()) {
        for (const auto& [key, value] : entries) {
            if (section == "io" && key == "out_dir") continue;
            parameters_[section][key] = value;
        }
    }
    // Hash the canonical text of what was kept.
    std::string canonical;
    for (const auto& [section, entries] : parameters_) {
        canonical += '[';
        canonical += section;
        canonical += "]\n";
        for (const auto& [key, value] : entries) {
            canonical += key;
            canonical += " = ";
            canonical += value;
            canonical += '\n';
        }
    }
    config_sha256_ = sha256_hex(canonical);
}

void RunManifest::set_seed(std::uint64_t seed) { seed_ = seed; }
void RunManifest::set_threads(int threads) { threads_ = threads; }

void RunManifest::add_input(const std::string& role, const std::string& path) {
    inputs_[role] = {std::filesystem::path(path).filename().string(), sha256_file_hex(path)};
}

void RunManifest::add_stage_seed(const std::string& stage, std::uint64_t seed) {
    stage_seeds_[stage] = seed;
}

void RunManifest::add_counter(const std::string& stage, const std::string& name,
                              std::uint64_t value) {
    counters_[stage][name] = value;
}

void RunManifest::add_artifact(const std::string& relative_path, const std::string& full_path) {
    artifacts_[relative_path] = sha256_file_hex(full_path);
}

void RunManifest::add_warning(const std::string& stage, const std::string& text) {
    warnings_.push_back(stage + ": " + text);
}

std::string RunManifest::to_json() const {
    // nlohmann::json objects are std::map-backed, so keys serialize sorted.
    nlohmann::json j;
    j["tool"]["name"] = tool_name_;
    j["tool"]["version"] = tool_version_;
    j["config_sha256"] = config_sha256_;
    j["seed"] = seed_;
    j["threads"] = threads_;
    for (const auto& [section, entries] : parameters_)
        for (const auto& [key, value] : entries) j["parameters"][section][key] = value;
    for (const auto& [role, file_sha] : inputs_) {
        j["inputs"][role]["file"] = file_sha.first;
        j["inputs"][role]["sha256"] = file_sha.second;
    }
    for (const auto& [stage, seed] : stage_seeds_) j["stage_seeds"][stage] = seed;
    for (const auto& [stage, names] : counters_)
        for (const auto& [name, value] : names) j["counters"][stage][name] = value;
    for (const auto& [rel, sha] : artifacts_) j["artifacts"][rel] = sha;
    j["warnings"] = warnings_;
    return j.dump(2) + "\n";
}

void RunManifest::write(const std::string& path) const { write_text(path, to_json()); }

void StageTimings::add(const std::string& stage, double seconds) {
    stages_.emplace_back(stage, seconds);
}

std::string StageTimings::to_json() const {
    nlohmann::json j;
    j["stages"] = nlohmann::json::array();
    double total = 0.0;
    for (const auto& [stage, seconds] : stages_) {
        nlohmann::json row;
        row["name"] = stage;
        row["seconds"] = seconds;
        j["stages"].push_back(row);
        total += seconds;
    }
    j["total_seconds"] = total;
    return j.dump(2) + "\n";
}

void StageTimings::write(const std::string& path) const { write_text(path, to_json()); }

}  // namespace cfx
