#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "riordan/bell.hpp"
#include "riordan/oeis.hpp"

using namespace riordan;

namespace {

const std::string fixture_dir = std::string(RIORDAN_SOURCE_DIR) + "/data/oeis";

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("riordan_oeis_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("offline fixture parses") {
    oeis::FetchOptions opts;
    opts.offline = true;
    opts.fixture_dir = fixture_dir;
    oeis::BFile bf = oeis::fetch_bfile("A008296", opts);
    REQUIRE(bf.entries.size() == 28);
    CHECK(bf.entries.front().first == 0);
    std::vector<long> head = {1, 0, 1, 0, 1, 1};
    for (size_t i = 0; i < head.size(); ++i) CHECK(bf.entries[i].second == Rational(head[i]));

    opts.fixture_dir = "/nonexistent";
    CHECK_THROWS_AS(oeis::fetch_bfile("A008296", opts), std::runtime_error);
    CHECK_THROWS_AS(oeis::fetch_bfile("B008296", opts), std::invalid_argument);
    CHECK_THROWS_AS(oeis::fetch_bfile("A82", opts), std::invalid_argument);
}

TEST_CASE("malformed lines are rejected with their line number") {
    CHECK_THROWS_WITH_AS(oeis::parse_bfile("A000001", "0 1\nnot numbers\n"),
                         "A000001 b-file: malformed line 2", std::runtime_error);
    CHECK_THROWS_WITH_AS(oeis::parse_bfile("A000001", "0 1\n1 2.5\n"),
                         "A000001 b-file: malformed line 2", std::runtime_error);
    CHECK_THROWS_WITH_AS(oeis::parse_bfile("A000001", "3 1\n2 1\n"),
                         "A000001 b-file: indices not increasing at line 2", std::runtime_error);
    // comments and blank lines are fine
    oeis::BFile ok = oeis::parse_bfile("A000001", "# header\n\n0 5\n1 -7\n");
    CHECK(ok.entries.size() == 2);
    CHECK(ok.entries[1].second == Rational(-7));
}

TEST_CASE("cache hits skip the network") {
    TempDir tmp;
    int fetches = 0;
    oeis::FetchOptions opts;
    opts.cache_dir = tmp.path.string();
    opts.http_get = [&](const std::string& url) -> std::optional<std::string> {
        ++fetches;
        CHECK(url == "https://oeis.org/A000108/b000108.txt");
        return std::string("0 1\n1 1\n2 2\n3 5\n");
    };
    oeis::BFile first = oeis::fetch_bfile("A000108", opts);
    CHECK(first.entries.size() == 4);
    CHECK(fetches == 1);
    oeis::BFile second = oeis::fetch_bfile("A000108", opts);
    CHECK(second.entries.size() == 4);
    CHECK(fetches == 1);  // served from the cache

    oeis::FetchOptions failing = opts;
    failing.cache_dir = (tmp.path / "other").string();
    failing.http_get = [](const std::string&) { return std::optional<std::string>{}; };
    CHECK_THROWS_AS(oeis::fetch_bfile("A000108", failing), std::runtime_error);
}

TEST_CASE("cache directory falls back to the environment") {
    TempDir tmp;
    setenv("RIORDAN_OEIS_CACHE", tmp.path.c_str(), 1);
    int fetches = 0;
    oeis::FetchOptions opts;  // no cache_dir set
    opts.http_get = [&](const std::string&) -> std::optional<std::string> {
        ++fetches;
        return std::string("1 42\n");
    };
    oeis::fetch_bfile("A000042", opts);
    oeis::fetch_bfile("A000042", opts);
    CHECK(fetches == 1);
    unsetenv("RIORDAN_OEIS_CACHE");
}

TEST_CASE("triangle crosscheck") {
    oeis::FetchOptions opts;
    opts.offline = true;
    opts.fixture_dir = fixture_dir;
    oeis::BFile bf = oeis::fetch_bfile("A008296", opts);

    auto rep = oeis::crosscheck_triangle(bell::lehmer_comtet_triangle(7), bf);
    CHECK(rep.full_match());
    CHECK(rep.compared == 28);

    // negative control: the identity triangle first departs from the
    // fixture at b(2,1) = 1, linear position 4
    auto bad = oeis::crosscheck_triangle(Triangle<Rational>::identity(7), bf);
    CHECK(!bad.full_match());
    CHECK(bad.first_mismatch == 4);

    // explicit start index shifts the alignment
    auto shifted = oeis::crosscheck_triangle(bell::lehmer_comtet_triangle(7), bf, 1);
    CHECK(shifted.first_mismatch.has_value());

    Triangle<Rational> nonint;
    nonint.rows = {{Rational(1, 2)}};
    CHECK_THROWS_AS(oeis::crosscheck_triangle(nonint, bf), std::domain_error);
}
