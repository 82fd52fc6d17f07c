#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "braidgen/growth.hpp"
#include "braidgen/oracle.hpp"

using namespace braidgen;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

mpz_class recurrence_value(const GrowthTables& g, int m, int j) {
    mpz_class acc = 0;
    for (int i = 1; i <= m; ++i) {
        const long long shift = static_cast<long long>(i) * (i - 1) / 2;
        if (shift > j) break;
        if (i % 2 == 1)
            acc += g.h_at(m - i, j - static_cast<int>(shift));
        else
            acc -= g.h_at(m - i, j - static_cast<int>(shift));
    }
    return acc;
}

}  // namespace

TEST_CASE("h rows for small strand counts") {
    GrowthTables g = build_growth(StrandCount(4), 10);
    CHECK(g.h[2] == std::vector<mpz_class>{1, -1});
    CHECK(g.h[3] == std::vector<mpz_class>{1, -2, 0, 1});
    for (int m = 0; m <= 4; ++m) CHECK(g.h_at(m, 0) == 1);
}

TEST_CASE("x values: the depth-3 tree and the free monoid") {
    GrowthTables g4 = build_growth(StrandCount(4), 10);
    CHECK(g4.x[3] == 19);
    CHECK(g4.x[0] == 1);
    CHECK(g4.x[1] == 3);
    CHECK(g4.x[2] == 8);
    GrowthTables g2 = build_growth(StrandCount(2), 100);
    for (int j = 0; j <= 100; ++j) CHECK(g2.x[j] == 1);
    GrowthTables g3 = build_growth(StrandCount(3), 3);
    CHECK(g3.x[3] == 7);
    CHECK(oracle::enumerate_lex_reps(StrandCount(3), 3).size() == 7);
}

TEST_CASE("convolution identity sum x[j-t] h[n][t] = 0") {
    for (int n = 2; n <= 8; ++n) {
        GrowthTables g = build_growth(StrandCount(n), 24);
        for (int j = 1; j <= 24; ++j) {
            mpz_class acc = 0;
            for (int t = 0; t <= std::min<long long>(j, n * (n - 1) / 2); ++t)
                acc += g.x[j - t] * g.h_at(n, t);
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("h vanishes beyond degree C(n,2)") {
    for (int n = 2; n <= 10; ++n) {
        const int degree = n * (n - 1) / 2;
        GrowthTables g = build_growth(StrandCount(n), degree + 8);
        for (int m = 0; m <= n; ++m) {
            const int md = m * (m - 1) / 2;
            for (int j = md + 1; j <= md + 8 && j <= degree + 8; ++j) {
                CHECK(g.h_at(m, j) == 0);
                CHECK(recurrence_value(g, m, j) == 0);  // one extra band of the recurrence
            }
        }
    }
}

TEST_CASE("x counts the enumerated language") {
    for (int n = 2; n <= 5; ++n) {
        GrowthTables g = build_growth(StrandCount(n), 8);
        for (int k = 0; k <= 8; ++k)
            CHECK(mpz_class(oracle::enumerate_lex_reps(StrandCount(n), k).size()) == g.x[k]);
    }
}

TEST_CASE("x is strictly increasing for n >= 3") {
    for (int n = 3; n <= 6; ++n) {
        GrowthTables g = build_growth(StrandCount(n), 20);
        for (int j = 0; j < 20; ++j) CHECK(g.x[j + 1] > g.x[j]);
    }
}

TEST_CASE("cache round trip") {
    const auto path = temp_file("braidgen_cache_roundtrip.txt");
    GrowthTables g = build_growth(StrandCount(4), 10);
    save_cache(g, path);
    GrowthTables loaded = load_cache(path);
    CHECK(loaded.n == g.n);
    CHECK(loaded.k_max == g.k_max);
    CHECK(loaded.h == g.h);
    CHECK(loaded.x == g.x);
    std::filesystem::remove(path);
}

TEST_CASE("cache extension keeps the prefix intact") {
    const auto path = temp_file("braidgen_cache_extend.txt");
    save_cache(build_growth(StrandCount(4), 5), path);
    GrowthTables fresh = build_growth(StrandCount(4), 8);
    GrowthTables ext = load_or_build(StrandCount(4), 8, path);
    CHECK(ext.k_max == 8);
    CHECK(ext.x == fresh.x);
    CHECK(ext.h == fresh.h);
    // the cache file was upgraded in place
    CHECK(load_cache(path).k_max == 8);
    std::filesystem::remove(path);
}

TEST_CASE("wrong magic header is rejected") {
    const auto path = temp_file("braidgen_cache_bad.txt");
    {
        std::ofstream out(path);
        out << "not-a-cache v9\n1 2 3\n";
    }
    CHECK_THROWS_WITH_AS(load_cache(path), "cache invalid", Error);
    // load_or_build recovers by rebuilding
    GrowthTables g = load_or_build(StrandCount(3), 4, path);
    CHECK(g.x[3] == 7);
    CHECK(load_cache(path).k_max == 4);
    std::filesystem::remove(path);
}

TEST_CASE("a cache for a different strand count is rebuilt") {
    const auto path = temp_file("braidgen_cache_other_n.txt");
    save_cache(build_growth(StrandCount(5), 6), path);
    GrowthTables g = load_or_build(StrandCount(4), 6, path);
    CHECK(g.n == 4);
    CHECK(g.x[3] == 19);
    CHECK(load_cache(path).n == 4);  // replaced on disk
    std::filesystem::remove(path);
}

TEST_CASE("truncated cache is rejected") {
    const auto path = temp_file("braidgen_cache_trunc.txt");
    {
        std::ofstream out(path);
        out << "braidgen-growth v1 n=4 kmax=10\n1\n1\n";
    }
    CHECK_THROWS_WITH_AS(load_cache(path), "cache invalid", Error);
    std::filesystem::remove(path);
}
