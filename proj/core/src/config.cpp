// campaign-forensics: INI-style configuration.
// SPDX-License-Identifier: MIT
#include "cfx/util/config.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cfx/util/error.hpp"

namespace cfx {
namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

}  // namespace

Config Config::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path);
}

Config Config::parse(const std::string& text, const std::string& origin) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']' || t.size() < 3)
                throw ValidationError(origin + ":" + std::to_string(line_no) +
                                      ": malformed section header: " + t);
            section = lower(trim(t.substr(1, t.size() - 2)));
            cfg.sections_[section];  // record even if empty
            continue;
        }
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ValidationError(origin + ":" + std::to_string(line_no) +
                                  ": expected key = value, got: " + t);
        const std::string key = lower(trim(t.substr(0, eq)));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw ValidationError(origin + ":" + std::to_string(line_no) + ": empty key");
        cfg.sections_[section][key] = value;
    }
    return cfg;
}

bool Config::has(const std::string& section, const std::string& key) const {
    auto s = sections_.find(lower(section));
    return s != sections_.end() && s->second.count(lower(key)) > 0;
}

std::optional<std::string> Config::get(const std::string& section, const std::string& key) const {
    auto s = sections_.find(lower(section));
    if (s == sections_.end()) return std::nullopt;
    auto k = s->second.find(lower(key));
    if (k == s->second.end()) return std::nullopt;
    return k->second;
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
    auto v = get(section, key);
    return v ? *v : fallback;
}

std::int64_t Config::get_int(const std::string& section, const std::string& key,
                             std::int64_t fallback) const {
    auto v = get(section, key);
    if (!v) return fallback;
    errno = 0;
    char* end = nullptr;
    const long long parsed = std::strtoll(v->c_str(), &end, 10);
    if (errno != 0 || end == v->c_str() || *end != '\0')
        throw ValidationError("config [" + section + "] " + key + ": not an integer: " + *v);
    return parsed;
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const {
    auto v = get(section, key);
    if (!v) return fallback;
    errno = 0;
    char* end = nullptr;
    const double parsed = std::strtod(v->c_str(), &end);
    if (errno != 0 || end == v->c_str() || *end != '\0')
        throw ValidationError("config [" + section + "] " + key + ": not a number: " + *v);
    return parsed;
}

bool Config::get_bool(const std::string& section, const std::string& key, bool fallback) const {
    auto v = get(section, key);
    if (!v) return fallback;
    const std::string s = lower(*v);
    if (s == "true" || s == "yes" || s == "on" || s == "1") return true;
    if (s == "false" || s == "no" || s == "off" || s == "0") return false;
    throw ValidationError("config [" + section + "] " + key + ": not a boolean: " + *v);
}

void Config::set(const std::string& section, const std::string& key, const std::string& value) {
    sections_[lower(section)][lower(key)] = value;
}

std::string Config::serialize() const {
    std::string out;
    for (const auto& [section, entries] : sections_) {
        if (!out.empty()) out.push_back('\n');
        out += "[" + section + "]\n";
        for (const auto& [key, value] : entries) out += key + " = " + value + "\n";
    }
    return out;
}

}  // namespace cfx
