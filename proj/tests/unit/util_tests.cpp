// campaign-forensics: unit tests for the utility layer (CSV, config, time,
// RNG, digests, interning, parallel-for).
// SPDX-License-Identifier: MIT
#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "cfx/util/config.hpp"
#include "cfx/util/csv.hpp"
#include "cfx/util/digest.hpp"
#include "cfx/util/error.hpp"
#include "cfx/util/interner.hpp"
#include "cfx/util/parallel.hpp"
#include "cfx/util/rng.hpp"
#include "cfx/util/time.hpp"
#include "doctest.h"

namespace {

std::filesystem::path temp_dir(const char* tag) {
    auto dir = std::filesystem::temp_directory_path() / (std::string("cfx_util_") + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("csv round-trips quoted fields") {
    std::vector<std::string> fields;
    REQUIRE(cfx::split_csv_line(R"(a,"b,c","d""e",, f )", fields));
    REQUIRE(fields.size() == 5);
    CHECK(fields[0] == "a");
    CHECK(fields[1] == "b,c");
    CHECK(fields[2] == "d\"e");
    CHECK(fields[3].empty());
    CHECK(fields[4] == " f ");

    const std::string line = cfx::join_csv_line({"a", "b,c", "d\"e", "", " f "});
    std::vector<std::string> back;
    REQUIRE(cfx::split_csv_line(line, back));
    CHECK(back == std::vector<std::string>{"a", "b,c", "d\"e", "", " f "});
}

TEST_CASE("csv rejects malformed quoting") {
    std::vector<std::string> fields;
    CHECK_FALSE(cfx::split_csv_line(R"("unterminated)", fields));
    CHECK_FALSE(cfx::split_csv_line(R"("x"y,z)", fields));
}

TEST_CASE("semicolon lists drop empty items") {
    CHECK(cfx::split_semicolon_list("") == std::vector<std::string>{});
    CHECK(cfx::split_semicolon_list("a;b;;c;") == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("format_double round-trips exactly") {
    for (double v : {0.0, -0.0, 1.0, 0.1, 1.0 / 3.0, 6.03, 1e-17, -123456.789, 1e300}) {
        const std::string s = cfx::format_double(v);
        CHECK(std::stod(s) == v);
    }
}

TEST_CASE("format_fixed renders presentation decimals") {
    CHECK(cfx::format_fixed(6.5499, 1) == "6.5");
    CHECK(cfx::format_fixed(73.444, 2) == "73.44");
    CHECK(cfx::format_fixed(-0.05, 1) == "-0.1");
}

TEST_CASE("config parses sections, comments, and typed getters") {
    const std::string text =
        "# comment\n"
        "[alpha]\n"
        "x = 10\n"
        "flag = true\n"
        "rate = 0.25\n"
        "; another comment\n"
        "[beta]\n"
        "name = hello world\n";
    const cfx::Config cfg = cfx::Config::parse(text);
    CHECK(cfg.get_int("alpha", "x", -1) == 10);
    CHECK(cfg.get_bool("alpha", "flag", false));
    CHECK(cfg.get_double("alpha", "rate", 0.0) == doctest::Approx(0.25));
    CHECK(cfg.get_string("beta", "name", "") == "hello world");
    CHECK(cfg.get_int("beta", "missing", 7) == 7);
    CHECK_FALSE(cfg.has("gamma", "x"));
}

TEST_CASE("config serialization is order-independent") {
    const cfx::Config a = cfx::Config::parse("[b]\nk2 = v2\nk1 = v1\n[a]\nz = 1\n");
    const cfx::Config b = cfx::Config::parse("[a]\nz = 1\n[b]\nk1 = v1\nk2 = v2\n");
    CHECK(a.serialize() == b.serialize());
}

TEST_CASE("config set overrides and load matches parse") {
    const auto dir = temp_dir("config");
    const auto path = (dir / "c.ini").string();
    {
        std::ofstream out(path);
        out << "[run]\nseed = 1\n";
    }
    cfx::Config cfg = cfx::Config::load(path);
    CHECK(cfg.get_int("run", "seed", 0) == 1);
    cfg.set("run", "seed", "99");
    CHECK(cfg.get_int("run", "seed", 0) == 99);
    CHECK_THROWS_AS(cfx::Config::load((dir / "absent.ini").string()), cfx::IoError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("iso8601 parsing is strict and format round-trips") {
    auto t = cfx::parse_iso8601_utc("2016-06-01T00:00:00Z");
    REQUIRE(t.has_value());
    CHECK(*t == 1464739200);
    CHECK(cfx::format_iso8601_utc(*t) == "2016-06-01T00:00:00Z");

    CHECK_FALSE(cfx::parse_iso8601_utc("2016-06-01 00:00:00").has_value());
    CHECK_FALSE(cfx::parse_iso8601_utc("2016-06-01T00:00:00").has_value());
    CHECK_FALSE(cfx::parse_iso8601_utc("2016-13-01T00:00:00Z").has_value());
    CHECK_FALSE(cfx::parse_iso8601_utc("2016-06-31T00:00:00Z").has_value());
    CHECK_FALSE(cfx::parse_iso8601_utc("2016-06-01T24:00:00Z").has_value());
    CHECK_FALSE(cfx::parse_iso8601_utc("2016-06-01T00:00:00.5Z").has_value());

    // Leap year handling.
    CHECK(cfx::parse_iso8601_utc("2016-02-29T12:00:00Z").has_value());
    CHECK_FALSE(cfx::parse_iso8601_utc("2015-02-29T12:00:00Z").has_value());
}

TEST_CASE("time windows bin inclusively") {
    const cfx::TimeWindow w{0, 14 * 86400 - 1};  // exactly 14 days
    CHECK(w.bin_count(cfx::kActivityBinSeconds) == 14 * cfx::kBinsPerDay);
    CHECK(w.bin_of(0, cfx::kActivityBinSeconds) == 0);
    CHECK(w.bin_of(899, cfx::kActivityBinSeconds) == 0);
    CHECK(w.bin_of(900, cfx::kActivityBinSeconds) == 1);
    CHECK(w.contains(0));
    CHECK(w.contains(w.end));
    CHECK_FALSE(w.contains(w.end + 1));
}

TEST_CASE("rng streams are deterministic and well-distributed") {
    cfx::Rng a(123), b(123), c(124);
    for (int i = 0; i < 16; ++i) CHECK(a() == b());
    bool differs = false;
    for (int i = 0; i < 16; ++i) differs |= (a() != c());
    CHECK(differs);

    // bounded() stays in range and covers the whole range for small bounds.
    cfx::Rng r(7);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t v = r.bounded(5);
        CHECK(v < 5);
        seen.insert(v);
    }
    CHECK(seen.size() == 5);

    // uniform() in [0,1); normal() has roughly standard moments.
    double sum = 0.0, sq = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const double u = r.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const double z = r.normal();
        sum += z;
        sq += z * z;
    }
    CHECK(std::abs(sum / n) < 0.05);
    CHECK(std::abs(sq / n - 1.0) < 0.05);
}

TEST_CASE("rng sampling without replacement is exact and seed-stable") {
    cfx::Rng r(42);
    const auto draw = r.sample_without_replacement(10, 10);
    std::set<std::uint32_t> unique(draw.begin(), draw.end());
    CHECK(unique.size() == 10);

    const auto d1 = cfx::Rng(9).sample_without_replacement(100, 7);
    const auto d2 = cfx::Rng(9).sample_without_replacement(100, 7);
    CHECK(d1 == d2);
    for (std::uint32_t v : d1) CHECK(v < 100);
}

TEST_CASE("derived rng streams are independent of parent consumption") {
    cfx::Rng parent(77);
    parent();
    parent();
    cfx::Rng d1 = cfx::Rng::derive(77, 5);
    cfx::Rng d2 = cfx::Rng::derive(77, 5);
    CHECK(d1() == d2());
    cfx::Rng d3 = cfx::Rng::derive(77, 6);
    CHECK(d1() != d3());  // astronomically unlikely to collide
}

TEST_CASE("sha256 matches known vectors") {
    CHECK(cfx::sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(cfx::sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");

    const auto dir = temp_dir("digest");
    const auto path = (dir / "f.txt").string();
    {
        std::ofstream out(path, std::ios::binary);
        out << "abc";
    }
    CHECK(cfx::sha256_file_hex(path) == cfx::sha256_hex("abc"));
    CHECK_THROWS_AS(cfx::sha256_file_hex((dir / "absent").string()), cfx::IoError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("interner assigns dense first-seen ids") {
    cfx::StringInterner in;
    CHECK(in.intern("b") == 0);
    CHECK(in.intern("a") == 1);
    CHECK(in.intern("b") == 0);
    CHECK(in.size() == 2);
    CHECK(in.str(1) == "a");
    CHECK(in.find("a") == 1);
    CHECK(in.find("zzz") == cfx::StringInterner::npos);

    // Stored views must survive rehashing.
    const std::string_view early = in.str(0);
    for (int i = 0; i < 5000; ++i) in.intern("k" + std::to_string(i));
    CHECK(early == "b");

    const auto sorted = in.ids_sorted_by_string();
    REQUIRE(sorted.size() == in.size());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        CHECK(in.str(sorted[i - 1]) < in.str(sorted[i]));
}

TEST_CASE("parallel_for covers every index exactly once") {
    cfx::set_thread_cap(4);
    std::vector<std::atomic<int>> hits(1000);
    cfx::parallel_for(0, hits.size(), [&](std::size_t i) { hits[i].fetch_add(1); });
    for (auto& h : hits) CHECK(h.load() == 1);

    // Exceptions propagate.
    CHECK_THROWS_AS(cfx::parallel_for(0, 8,
                                      [&](std::size_t i) {
                                          if (i == 3) throw cfx::ValidationError("boom");
                                      }),
                    cfx::ValidationError);
    cfx::set_thread_cap(0);
}
