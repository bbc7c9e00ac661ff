// campaign-forensics: string interning to dense 32-bit ids.
// SPDX-License-Identifier: MIT
//
// The corpora are large (hundreds of millions of rows at full scale) and
// every row repeats user ids, domains, hashtags, and client names.  All
// analysis stages work on dense uint32 ids; the interner owns the id ↔
// string mapping.  Ids are assigned in first-seen order, so identical input
// bytes yield identical id assignments (parse determinism).
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cfx {

class StringInterner {
public:
    static constexpr std::uint32_t npos = 0xffffffffu;

    /// Intern `s`, returning its dense id (existing or freshly assigned).
    std::uint32_t intern(std::string_view s) {
        auto it = index_.find(s);
        if (it != index_.end()) return it->second;
        const auto id = static_cast<std::uint32_t>(views_.size());
        // unordered_map nodes are stable across rehashing, so views of the
        // stored keys stay valid for the interner's lifetime.  Each string is
        // stored exactly once.
        auto [pos, inserted] = index_.emplace(std::string(s), id);
        (void)inserted;
        views_.push_back(pos->first);
        return id;
    }

    /// Lookup without inserting; npos if unknown.
    std::uint32_t find(std::string_view s) const {
        auto it = index_.find(s);
        return it == index_.end() ? npos : it->second;
    }

    std::string_view str(std::uint32_t id) const { return views_[id]; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(views_.size()); }

    /// Ids of all strings, ordered lexicographically by string value; used
    /// for canonical (input-order-independent) exports.
    std::vector<std::uint32_t> ids_sorted_by_string() const;

private:
    struct SvHash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const noexcept {
            return std::hash<std::string_view>{}(s);
        }
    };
    struct SvEq {
        using is_transparent = void;
        bool operator()(std::string_view a, std::string_view b) const noexcept { return a == b; }
    };

    std::unordered_map<std::string, std::uint32_t, SvHash, SvEq> index_;
    std::vector<std::string_view> views_;
};

}  // namespace cfx
