// campaign-forensics: corpus model helpers.
// SPDX-License-Identifier: MIT
#include "cfx/corpus/records.hpp"

#include <algorithm>
#include <cctype>

namespace cfx {

std::string_view tweet_kind_token(TweetKind kind) {
    switch (kind) {
        case TweetKind::original: return "original";
        case TweetKind::retweet: return "retweet";
        case TweetKind::reply: return "reply";
        case TweetKind::quote: return "quote";
        case TweetKind::mention: return "mention";
    }
    return "original";
}

bool parse_tweet_kind(std::string_view token, TweetKind& out) {
    if (token == "original") out = TweetKind::original;
    else if (token == "retweet") out = TweetKind::retweet;
    else if (token == "reply") out = TweetKind::reply;
    else if (token == "quote") out = TweetKind::quote;
    else if (token == "mention") out = TweetKind::mention;
    else return false;
    return true;
}

std::string normalize_domain(std::string_view url) {
    // Strip scheme.
    const std::size_t scheme = url.find("://");
    if (scheme != std::string_view::npos) url.remove_prefix(scheme + 3);
    // Strip userinfo (rare, but cheap to handle).
    const std::size_t at = url.find('@');
    const std::size_t first_slash = url.find_first_of("/?#:");
    if (at != std::string_view::npos && (first_slash == std::string_view::npos || at < first_slash))
        url.remove_prefix(at + 1);
    // Keep the host only.
    const std::size_t cut = url.find_first_of("/?#:");
    if (cut != std::string_view::npos) url = url.substr(0, cut);
    std::string host(url);
    std::transform(host.begin(), host.end(), host.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (host.rfind("www.", 0) == 0) host.erase(0, 4);
    return host;
}

}  // namespace cfx
