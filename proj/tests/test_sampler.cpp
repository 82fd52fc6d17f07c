#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "braidgen/automaton.hpp"
#include "braidgen/growth.hpp"
#include "braidgen/oracle.hpp"
#include "braidgen/prefixes.hpp"
#include "braidgen/sampler.hpp"

using namespace braidgen;

namespace {

ArtinWord make(StrandCount n, std::initializer_list<int> ls) {
    std::vector<Letter> v;
    for (int l : ls) v.push_back(static_cast<Letter>(l));
    return ArtinWord(n, std::move(v));
}

}  // namespace

TEST_CASE("unrank worked examples") {
    const StrandCount n4(4);
    GrowthTables g = build_growth(n4, 3);
    CHECK(unrank(n4, 3, 16, g) == make(n4, {3, 2, 1}));
    CHECK(unrank(n4, 3, 1, g) == make(n4, {1, 1, 1}));
    CHECK(unrank(n4, 3, 19, g) == make(n4, {3, 3, 3}));
    GrowthTables g2 = build_growth(StrandCount(2), 5);
    CHECK(unrank(StrandCount(2), 5, 1, g2) == make(StrandCount(2), {1, 1, 1, 1, 1}));
    CHECK_THROWS_WITH_AS(unrank(n4, 3, 20, g), "rank out of range", Error);
    CHECK_THROWS_WITH_AS(unrank(n4, 3, 0, g), "rank out of range", Error);
}

TEST_CASE("rank worked examples") {
    const StrandCount n4(4);
    GrowthTables g = build_growth(n4, 3);
    CHECK(rank(make(n4, {3, 2, 1}), g) == 16);
    CHECK(rank(make(n4, {1, 1, 1}), g) == 1);
    CHECK_THROWS_WITH_AS(rank(make(n4, {2, 1, 2}), g), "not a lex-representative", Error);
}

TEST_CASE("round trip and order preservation, exhaustive small cases") {
    for (int n = 2; n <= 4; ++n) {
        const StrandCount sc(n);
        GrowthTables g = build_growth(sc, 6);
        for (int k = 0; k <= 6; ++k) {
            ArtinWord prev = ArtinWord::empty(sc);
            for (mpz_class r = 1; r <= g.x[k]; ++r) {
                const ArtinWord w = unrank(sc, k, r, g);
                CHECK(rank(w, g) == r);
                if (r > 1) CHECK(lex_compare(prev, w) == Ordering::less);
                prev = w;
            }
        }
    }
}

TEST_CASE("unrank enumerates exactly the oracle's language") {
    for (int n = 2; n <= 4; ++n) {
        const StrandCount sc(n);
        GrowthTables g = build_growth(sc, 5);
        for (int k = 0; k <= 5; ++k) {
            const auto reps = oracle::enumerate_lex_reps(sc, k);
            REQUIRE(mpz_class(reps.size()) == g.x[k]);
            for (std::size_t i = 0; i < reps.size(); ++i)
                CHECK(unrank(sc, k, static_cast<long>(i + 1), g) == reps[i]);
        }
    }
}

TEST_CASE("round trip on random ranks at (8, 32)") {
    const StrandCount n8(8);
    GrowthTables g = build_growth(n8, 32);
    RandomSource rng(424242);
    for (int trial = 0; trial < 1000; ++trial) {
        const mpz_class r = rng.uniform_below(g.x[32]) + 1;
        CHECK(rank(unrank(n8, 32, r, g), g) == r);
    }
}

TEST_CASE("large draws are lex-representatives and rank back") {
    const StrandCount n64(64);
    GrowthTables g = build_growth(n64, 128);
    RandomSource rng(1);
    const mpz_class r = rng.uniform_below(g.x[128]) + 1;
    const ArtinWord w = unrank(n64, 128, r, g);
    CHECK(w.size() == 128);
    CHECK(f_for_word(w).has_value());
    CHECK(rank(w, g) == r);
}

TEST_CASE("samples are valid words and deterministic under a seed") {
    const StrandCount n8(8);
    GrowthTables g = build_growth(n8, 25);
    LexAutomaton a = build_automaton(n8);
    SampleRequest req{n8, 25, 50, 987654321};
    const auto first = sample(req, g);
    const auto second = sample(req, g);
    CHECK(first == second);
    for (const ArtinWord& w : first) {
        CHECK(w.size() == 25);
        CHECK(accepts(a, w));
    }
    SampleRequest other{n8, 25, 50, 987654322};
    CHECK(sample(other, g) != first);
}

TEST_CASE("k = 0 samples the empty word") {
    const StrandCount n5(5);
    GrowthTables g = build_growth(n5, 0);
    SampleRequest req{n5, 0, 3, 1};
    for (const ArtinWord& w : sample(req, g)) CHECK(w.is_empty());
}

TEST_CASE("malformed sample requests are rejected") {
    const StrandCount n5(5);
    GrowthTables g = build_growth(n5, 4);
    CHECK_THROWS_AS(sample(SampleRequest{n5, -1, 1, 1}, g), Error);
    CHECK_THROWS_AS(sample(SampleRequest{n5, 5, 1, 1}, g), Error);
    CHECK_THROWS_AS(sample(SampleRequest{n5, 2, 0, 1}, g), Error);
    CHECK_THROWS_AS(sample(SampleRequest{StrandCount(4), 2, 1, 1}, g), Error);
    CHECK_THROWS_AS(unrank(n5, -1, 1, g), Error);
}

TEST_CASE("uniform_below is exact on tiny bounds") {
    RandomSource rng(7);
    std::map<long, long> hist;
    for (int i = 0; i < 30000; ++i) hist[rng.uniform_below(3).get_si()] += 1;
    REQUIRE(hist.size() == 3);
    for (const auto& [value, count] : hist) {
        CHECK(value >= 0);
        CHECK(value < 3);
        CHECK(count > 9500);
        CHECK(count < 10500);
    }
    CHECK(rng.uniform_below(1) == 0);
    CHECK_THROWS_AS(rng.uniform_below(0), Error);
}

TEST_CASE("chi-square smoke test at (4,3)") {
    const StrandCount n4(4);
    GrowthTables g = build_growth(n4, 3);
    SampleRequest req{n4, 3, 19000, 20240601};
    std::map<std::string, long> hist;
    for (const ArtinWord& w : sample(req, g)) hist[format_word(w)] += 1;
    REQUIRE(hist.size() == 19);
    double chi2 = 0.0;
    for (const auto& [key, count] : hist) {
        const double d = count - 1000.0;
        chi2 += d * d / 1000.0;
    }
    CHECK(chi2 < 42.31);
}

TEST_CASE("naive sampler is the letters-uniform baseline") {
    RandomSource rng(5);
    const ArtinWord w = naive_sample(StrandCount(2), 9, rng);
    CHECK(w == make(StrandCount(2), {1, 1, 1, 1, 1, 1, 1, 1, 1}));
    std::map<int, long> first_letter;
    for (int i = 0; i < 9000; ++i) first_letter[naive_sample(StrandCount(4), 1, rng).letter(0)] += 1;
    REQUIRE(first_letter.size() == 3);
    for (const auto& [letter, count] : first_letter) CHECK(count > 2700);
}

TEST_CASE("naive bias smoke: half twist over sigma_1^6, 30k draws") {
    const StrandCount n4(4);
    std::set<std::string> delta_words;
    for (const ArtinWord& u : oracle::closure(make(n4, {1, 2, 1, 3, 2, 1})))
        delta_words.insert(format_word(u));
    REQUIRE(delta_words.size() == 16);
    RandomSource rng(31337);
    long hits_delta = 0, hits_power = 0;
    for (int i = 0; i < 30000; ++i) {
        const std::string s = format_word(naive_sample(n4, 6, rng));
        if (s == "1 1 1 1 1 1")
            ++hits_power;
        else if (delta_words.count(s))
            ++hits_delta;
    }
    // expectations: 30000/729 = 41 occurrences of sigma_1^6, 16x that for the
    // half twist; even at this size the bias is unmistakable
    CHECK(hits_delta > 4 * hits_power);
}

TEST_CASE("derived streams differ per index") {
    RandomSource a = RandomSource::derived(1, 0);
    RandomSource b = RandomSource::derived(1, 1);
    CHECK(a.next_u64() != b.next_u64());
    RandomSource c = RandomSource::derived(1, 0);
    CHECK(RandomSource::derived(1, 0).next_u64() == c.next_u64());
}
