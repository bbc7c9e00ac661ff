// campaign-forensics: unit tests for corpus loading, validation counters,
// round-tripping, and the reference tables.
// SPDX-License-Identifier: MIT
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cfx/corpus/ingest.hpp"
#include "cfx/corpus/records.hpp"
#include "cfx/corpus/tables.hpp"
#include "cfx/util/error.hpp"
#include "cfx/util/time.hpp"
#include "doctest.h"

namespace {

std::filesystem::path temp_dir(const char* tag) {
    auto dir = std::filesystem::temp_directory_path() / (std::string("cfx_ingest_") + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

cfx::TimeWindow june_window() {
    return {*cfx::parse_iso8601_utc("2016-06-01T00:00:00Z"),
            *cfx::parse_iso8601_utc("2016-06-14T23:59:59Z")};
}

const char* kMixedCsv =
    "tweet_id,author_id,timestamp,kind,target_user_id,mentioned_user_ids,urls,hashtags,client\n"
    "t1,alice,2016-06-01T10:00:00Z,original,,,http://News.example/a;other.example/x,Tag1;#tag2,"
    "Web Client\n"
    "t2,bob,2016-06-02T11:00:00Z,retweet,alice,,news.example/path?q=1,,Phone App\n"
    "t3,carol,2016-06-03T09:30:00Z,reply,bob,alice;bob,,tag2,Web Client\n"
    "t4,dave,2016-06-04T12:00:00Z,quote,carol,,unknown.example,,SomeApp\n"
    "t5,erin,2016-06-05T08:00:00Z,mention,,alice,,,Deck\n"
    "not a valid row\n"
    "t6,frank,not-a-time,original,,,,,Web Client\n"
    "t7,gina,2016-06-06T10:00:00Z,boost,,,,,Web Client\n"
    "t2,dora,2016-06-07T10:00:00Z,original,,,,,Web Client\n"
    "t8,hank,2016-05-01T10:00:00Z,original,,,,,Web Client\n"
    "t9,irene,2016-06-08T10:00:00Z,retweet,,,,,Web Client\n";

}  // namespace

TEST_CASE("load_corpus counts malformed, duplicate, and out-of-window lines") {
    const auto dir = temp_dir("counts");
    const auto path = dir / "corpus.csv";
    write_file(path, kMixedCsv);

    cfx::IngestReport rep;
    const cfx::Corpus corpus = cfx::load_corpus(path.string(), june_window(), &rep, 0.6);

    CHECK(rep.lines == 11);           // header not counted
    CHECK(rep.accepted == 5);
    CHECK(rep.malformed == 5);        // bad row, bad time, bad kind, missing target, duplicate
    CHECK(rep.duplicate_ids == 1);
    CHECK(rep.outside_window == 1);
    CHECK(rep.first_malformed.find("corpus.csv:7") != std::string::npos);

    REQUIRE(corpus.size() == 5);
    CHECK(corpus.tweet_id(0) == "t1");
    CHECK(corpus.users.str(corpus.author[1]) == "bob");
    CHECK(corpus.kind[1] == cfx::TweetKind::retweet);
    CHECK(corpus.users.str(corpus.target[1]) == "alice");
    CHECK(corpus.target[0] == cfx::kNoUser);

    // Mentions of the reply row.
    const auto mentions = corpus.mentions(2);
    REQUIRE(mentions.size() == 2);
    CHECK(corpus.users.str(mentions[0]) == "alice");
    CHECK(corpus.users.str(mentions[1]) == "bob");

    // URLs are domain-normalized at load time; hashtags lowercased, '#' stripped.
    const auto urls = corpus.urls(0);
    REQUIRE(urls.size() == 2);
    CHECK(corpus.domains.str(urls[0]) == "news.example");
    CHECK(corpus.domains.str(urls[1]) == "other.example");
    const auto tags = corpus.tags(0);
    REQUIRE(tags.size() == 2);
    CHECK(corpus.hashtags.str(tags[0]) == "tag1");
    CHECK(corpus.hashtags.str(tags[1]) == "tag2");

    CHECK(corpus.clients.str(corpus.client[4]) == "Deck");

    // The same file trips the malformed-fraction guard at the default limit.
    CHECK_THROWS_AS(cfx::load_corpus(path.string(), june_window()), cfx::ValidationError);
    try {
        cfx::load_corpus(path.string(), june_window());
    } catch (const cfx::ValidationError& e) {
        CHECK(std::string(e.what()).find("corpus.csv:7") != std::string::npos);
    }

    CHECK_THROWS_AS(cfx::load_corpus((dir / "absent.csv").string(), june_window()), cfx::IoError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("jsonl and csv inputs produce identical corpora") {
    const auto dir = temp_dir("jsonl");
    const auto csv_path = dir / "corpus.csv";
    const auto jsonl_path = dir / "corpus.jsonl";
    write_file(csv_path,
               "t1,alice,2016-06-01T10:00:00Z,original,,,http://News.example/a;other.example/x,"
               "Tag1;#tag2,Web Client\n"
               "t2,bob,2016-06-02T11:00:00Z,retweet,alice,,news.example/path?q=1,,Phone App\n"
               "t3,carol,2016-06-03T09:30:00Z,reply,bob,alice;bob,,tag2,Web Client\n");
    write_file(
        jsonl_path,
        R"({"tweet_id":"t1","author_id":"alice","timestamp":"2016-06-01T10:00:00Z","kind":"original","target_user_id":"","mentioned_user_ids":[],"urls":["http://News.example/a","other.example/x"],"hashtags":["Tag1","#tag2"],"client":"Web Client"})"
        "\n"
        R"({"tweet_id":"t2","author_id":"bob","timestamp":"2016-06-02T11:00:00Z","kind":"retweet","target_user_id":"alice","urls":"news.example/path?q=1","client":"Phone App"})"
        "\n"
        R"({"tweet_id":"t3","author_id":"carol","timestamp":"2016-06-03T09:30:00Z","kind":"reply","target_user_id":"bob","mentioned_user_ids":"alice;bob","hashtags":["tag2"],"client":"Web Client"})"
        "\n");

    const cfx::Corpus from_csv = cfx::load_corpus(csv_path.string(), june_window());
    const cfx::Corpus from_jsonl = cfx::load_corpus(jsonl_path.string(), june_window());
    REQUIRE(from_csv.size() == 3);
    REQUIRE(from_jsonl.size() == 3);

    const auto a_path = dir / "a.csv";
    const auto b_path = dir / "b.csv";
    cfx::write_corpus_csv(from_csv, a_path.string());
    cfx::write_corpus_csv(from_jsonl, b_path.string());
    CHECK(read_file(a_path) == read_file(b_path));
    std::filesystem::remove_all(dir);
}

TEST_CASE("write_corpus_csv round-trips byte-identically") {
    const auto dir = temp_dir("roundtrip");
    const auto path = dir / "corpus.csv";
    write_file(path, kMixedCsv);
    const cfx::Corpus corpus = cfx::load_corpus(path.string(), june_window(), nullptr, 0.6);

    const auto first = dir / "copy1.csv";
    const auto second = dir / "copy2.csv";
    cfx::write_corpus_csv(corpus, first.string());
    const cfx::Corpus reloaded = cfx::load_corpus(first.string(), june_window());
    cfx::write_corpus_csv(reloaded, second.string());
    CHECK(read_file(first) == read_file(second));
    CHECK(reloaded.size() == corpus.size());
    std::filesystem::remove_all(dir);
}

TEST_CASE("normalize_domain reduces URLs to lowercase hosts") {
    CHECK(cfx::normalize_domain("HTTPS://WWW.Foo.Example/Bar?q=1#frag") == "foo.example");
    CHECK(cfx::normalize_domain("news.example/path") == "news.example");
    CHECK(cfx::normalize_domain("www.news.example") == "news.example");
    CHECK(cfx::normalize_domain("host.example:8080/x") == "host.example");
    CHECK(cfx::normalize_domain("user@host.example/p") == "host.example");
    CHECK(cfx::normalize_domain("http://a.b.example") == "a.b.example");
}

TEST_CASE("tag_news_category uses the first mapped URL") {
    const auto dir = temp_dir("tagging");
    const auto path = dir / "c.csv";
    write_file(path,
               "t1,alice,2016-06-01T10:00:00Z,original,,,miss.example/x;hit.example/y,,App\n"
               "t2,bob,2016-06-01T11:00:00Z,original,,,,,App\n"
               "t3,carol,2016-06-01T12:00:00Z,original,,,other.example,,App\n");
    const cfx::Corpus corpus = cfx::load_corpus(path.string(), june_window());
    const cfx::CategoryMap map = cfx::CategoryMap::from_rows(
        {{"hit.example", cfx::NewsCategory::center}, {"other.example", cfx::NewsCategory::left}});

    // First URL unmapped, second mapped → the mapped one counts.
    auto cat = cfx::tag_news_category(corpus, 0, map);
    REQUIRE(cat.has_value());
    CHECK(*cat == cfx::NewsCategory::center);
    CHECK_FALSE(cfx::tag_news_category(corpus, 1, map).has_value());
    CHECK(*cfx::tag_news_category(corpus, 2, map) == cfx::NewsCategory::left);
    std::filesystem::remove_all(dir);
}

TEST_CASE("status table resolves users with ira precedence") {
    const cfx::StatusTable table = cfx::StatusTable::from_rows({
        {"alice", cfx::AccountStatus::verified},
        {"bob", cfx::AccountStatus::suspended},
        {"bob", cfx::AccountStatus::suspended},   // exact duplicate is fine
        {"carol", cfx::AccountStatus::not_found},
        {"carol", cfx::AccountStatus::ira},       // ira wins over any other label
    });
    CHECK(table.lookup("alice") == cfx::AccountStatus::verified);
    CHECK(table.lookup("carol") == cfx::AccountStatus::ira);
    CHECK_FALSE(table.lookup("nobody").has_value());

    CHECK_THROWS_AS(cfx::StatusTable::from_rows({{"x", cfx::AccountStatus::verified},
                                                 {"x", cfx::AccountStatus::suspended}}),
                    cfx::ValidationError);

    const auto dir = temp_dir("statuses");
    const auto path = dir / "statuses.csv";
    write_file(path, "user_id,status\nalice,verified\nbob,ira\n");
    const cfx::StatusTable loaded = cfx::StatusTable::load(path.string());
    CHECK(loaded.size() == 2);
    CHECK(loaded.lookup("bob") == cfx::AccountStatus::ira);
    std::filesystem::remove_all(dir);
}

TEST_CASE("resolve_statuses marks unlisted users absent") {
    const auto dir = temp_dir("resolve");
    const auto path = dir / "c.csv";
    write_file(path,
               "t1,alice,2016-06-01T10:00:00Z,retweet,bob,,,,App\n"
               "t2,zoe,2016-06-01T11:00:00Z,original,,,,,App\n");
    const cfx::Corpus corpus = cfx::load_corpus(path.string(), june_window());
    const cfx::StatusTable table = cfx::StatusTable::from_rows(
        {{"alice", cfx::AccountStatus::verified}, {"bob", cfx::AccountStatus::ira}});
    const cfx::ResolvedStatuses st = cfx::resolve_statuses(corpus, table);
    CHECK(st.by_user.size() == corpus.users.size());
    CHECK(st.known(corpus.users.find("alice")));
    CHECK(st.status_or(corpus.users.find("bob"), cfx::AccountStatus::not_found) ==
          cfx::AccountStatus::ira);
    CHECK_FALSE(st.known(corpus.users.find("zoe")));
    CHECK(st.status_or(corpus.users.find("zoe"), cfx::AccountStatus::not_found) ==
          cfx::AccountStatus::not_found);
    std::filesystem::remove_all(dir);
}

TEST_CASE("category map normalizes domains and rejects conflicts") {
    const cfx::CategoryMap map = cfx::CategoryMap::from_rows(
        {{"WWW.News.Example", cfx::NewsCategory::right}, {"other.example", cfx::NewsCategory::left}});
    CHECK(map.lookup_domain("news.example") == cfx::NewsCategory::right);
    CHECK_FALSE(map.lookup_domain("missing.example").has_value());
    CHECK_THROWS_AS(cfx::CategoryMap::from_rows({{"a.example", cfx::NewsCategory::left},
                                                 {"a.example", cfx::NewsCategory::right}}),
                    cfx::ValidationError);
}

TEST_CASE("client registry is case-insensitive") {
    const cfx::ClientRegistry reg = cfx::ClientRegistry::from_names({"Web Client", "Phone App"});
    CHECK(reg.is_official("web client"));
    CHECK(reg.is_official("WEB CLIENT"));
    CHECK_FALSE(reg.is_official("AutoPilot 2.1"));

    const auto dir = temp_dir("clients");
    const auto path = dir / "clients.csv";
    write_file(path, "# official applications\nWeb Client\n\nPhone App\n");
    const cfx::ClientRegistry loaded = cfx::ClientRegistry::load(path.string());
    CHECK(loaded.size() == 2);
    CHECK(loaded.is_official("phone app"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("stance lexicon rejects hashtags claimed by both camps") {
    cfx::StanceLexicon lex = cfx::StanceLexicon::from_rows(
        {{"maga", cfx::Camp::pro_t}, {"imwithher", cfx::Camp::pro_c}});
    CHECK(lex.lookup("maga") == cfx::Camp::pro_t);
    CHECK_FALSE(lex.lookup("neutraltag").has_value());
    lex.add("newtag", cfx::Camp::pro_c);
    CHECK(lex.lookup("newtag") == cfx::Camp::pro_c);
    CHECK_THROWS_AS(cfx::StanceLexicon::from_rows(
                        {{"x", cfx::Camp::pro_t}, {"x", cfx::Camp::pro_c}}),
                    cfx::ValidationError);
}

TEST_CASE("tweet kind tokens round-trip") {
    for (int k = 0; k < cfx::kTweetKindCount; ++k) {
        const auto kind = static_cast<cfx::TweetKind>(k);
        cfx::TweetKind back;
        REQUIRE(cfx::parse_tweet_kind(cfx::tweet_kind_token(kind), back));
        CHECK(back == kind);
    }
    cfx::TweetKind out;
    CHECK_FALSE(cfx::parse_tweet_kind("boost", out));

    for (int s = 0; s < cfx::kAccountStatusCount; ++s) {
        const auto status = static_cast<cfx::AccountStatus>(s);
        cfx::AccountStatus back;
        REQUIRE(cfx::parse_account_status(cfx::account_status_token(status), back));
        CHECK(back == status);
    }
    for (int c = 0; c < cfx::kNewsCategoryCount; ++c) {
        const auto cat = static_cast<cfx::NewsCategory>(c);
        cfx::NewsCategory back;
        REQUIRE(cfx::parse_news_category(cfx::news_category_token(cat), back));
        CHECK(back == cat);
    }
}
