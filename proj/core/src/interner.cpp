// campaign-forensics: string interner.
// SPDX-License-Identifier: MIT
#include "cfx/util/interner.hpp"

#include <algorithm>
#include <numeric>

namespace cfx {

std::vector<std::uint32_t> StringInterner::ids_sorted_by_string() const {
    std::vector<std::uint32_t> ids(views_.size());
    std::iota(ids.begin(), ids.end(), 0u);
    std::sort(ids.begin(), ids.end(), [this](std::uint32_t a, std::uint32_t b) {
        return views_[a] < views_[b];
    });
    return ids;
}

}  // namespace cfx
