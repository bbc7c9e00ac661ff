// campaign-forensics: INI-style configuration ([section] key = value).
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace cfx {

/// Parsed configuration.  Sections and keys are stored sorted (std::map) so
/// serialization — and therefore the config hash in the run manifest — is
/// independent of file order.
class Config {
public:
    Config() = default;

    /// Parse from file.  Lines: "[section]", "key = value", blank, or
    /// "# comment" / "; comment".  Throws IoError / ValidationError.
    static Config load(const std::string& path);

    /// Parse from an in-memory string (same grammar).
    static Config parse(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& section, const std::string& key) const;

    std::optional<std::string> get(const std::string& section, const std::string& key) const;

    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;
    std::int64_t get_int(const std::string& section, const std::string& key,
                         std::int64_t fallback) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    bool get_bool(const std::string& section, const std::string& key, bool fallback) const;

    void set(const std::string& section, const std::string& key, const std::string& value);

    /// Canonical text form: sections and keys sorted, "key = value" lines.
    std::string serialize() const;

    const std::map<std::string, std::map<std::string, std::string>>& sections() const {
        return sections_;
    }

private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

}  // namespace cfx
