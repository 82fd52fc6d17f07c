#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "braidgen/automaton.hpp"
#include "braidgen/growth.hpp"
#include "braidgen/oracle.hpp"
#include "braidgen/prefixes.hpp"

using namespace braidgen;

namespace {

ArtinWord make(StrandCount n, std::initializer_list<int> ls) {
    std::vector<Letter> v;
    for (int l : ls) v.push_back(static_cast<Letter>(l));
    return ArtinWord(n, std::move(v));
}

}  // namespace

TEST_CASE("accepted state counts for small n") {
    CHECK(build_automaton(StrandCount(3)).accepted_count() == 5);
    CHECK(build_automaton(StrandCount(4)).accepted_count() == 18);
    CHECK(build_automaton(StrandCount(7)).accepted_count() == 443);
}

TEST_CASE("the ceiling refuses runaway strand counts") {
    CHECK_THROWS_AS(build_automaton(StrandCount(17)), Error);
    CHECK_NOTHROW(build_automaton(StrandCount(11), 11));
}

TEST_CASE("acceptance of the classic pair") {
    const StrandCount n3(3);
    LexAutomaton a = build_automaton(n3);
    CHECK(accepts(a, make(n3, {1, 2, 1})));
    CHECK_FALSE(accepts(a, make(n3, {2, 1, 2})));
    CHECK(accepts(a, ArtinWord::empty(n3)));
    // once failed, always failed
    CHECK_FALSE(accepts(a, make(n3, {2, 1, 2, 1, 1, 1})));
}

TEST_CASE("path counts match the census of the tree") {
    LexAutomaton a4 = build_automaton(StrandCount(4));
    CHECK(path_count(a4, 3) == 19);
    CHECK(path_count(a4, 2) == 8);
    CHECK(path_count(a4, 0) == 1);
    CHECK(path_count(build_automaton(StrandCount(2)), 12) == 1);
}

TEST_CASE("path counts match the growth table up to length 30") {
    for (int n = 2; n <= 6; ++n) {
        LexAutomaton a = build_automaton(StrandCount(n));
        GrowthTables g = build_growth(StrandCount(n), 30);
        for (int k = 0; k <= 30; ++k) CHECK(path_count(a, k) == g.x[k]);
    }
}

TEST_CASE("acceptance agrees with the transition function everywhere it is cheap") {
    // 10^5 random words up to length 50 for n <= 8, plus exhaustive words of
    // length <= 7 for n <= 4
    std::mt19937 rng(4321);
    std::uniform_int_distribution<int> pick_n(2, 8);
    std::uniform_int_distribution<int> pick_len(0, 50);
    std::map<int, LexAutomaton> automata;
    for (int n = 2; n <= 8; ++n) automata.emplace(n, build_automaton(StrandCount(n)));
    for (int trial = 0; trial < 100000; ++trial) {
        const int n = pick_n(rng);
        std::uniform_int_distribution<int> letter(1, n - 1);
        std::vector<Letter> ls(pick_len(rng));
        for (auto& l : ls) l = static_cast<Letter>(letter(rng));
        const ArtinWord u(StrandCount(n), std::move(ls));
        if (accepts(automata.at(n), u) != f_for_word(u).has_value()) {
            CHECK(format_word(u) == "counterexample");  // fail loudly with the word
        }
    }
    for (int n = 2; n <= 4; ++n) {
        const StrandCount sc(n);
        std::vector<ArtinWord> layer{ArtinWord::empty(sc)};
        for (int len = 0; len <= 7; ++len) {
            for (const ArtinWord& u : layer)
                CHECK(accepts(automata.at(n), u) == f_for_word(u).has_value());
            if (len == 7) break;
            std::vector<ArtinWord> next;
            for (const ArtinWord& u : layer)
                for (int i = 1; i <= n - 1; ++i) next.push_back(u.appended(static_cast<Letter>(i)));
            layer = std::move(next);
        }
    }
}

TEST_CASE("acceptance agrees with the oracle on random words") {
    std::mt19937 rng(99);
    for (int n = 2; n <= 5; ++n) {
        const StrandCount sc(n);
        LexAutomaton a = build_automaton(sc);
        std::uniform_int_distribution<int> letter(1, n - 1);
        std::uniform_int_distribution<int> len(0, 10);
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<Letter> ls(len(rng));
            for (auto& l : ls) l = static_cast<Letter>(letter(rng));
            const ArtinWord u(sc, std::move(ls));
            CHECK(accepts(a, u) == oracle::is_lex_rep(u));
        }
    }
}

TEST_CASE("automata are minimal; a forged duplicate is not") {
    for (int n = 2; n <= 8; ++n) CHECK(check_minimality(build_automaton(StrandCount(n))));

    // duplicating a state (same outgoing row) must be detected as mergeable
    LexAutomaton forged = build_automaton(StrandCount(3));
    const int letters = forged.n.n - 1;
    const int old_fail = forged.fail();
    std::vector<std::int32_t> row(forged.delta.begin() + 1 * letters,
                                  forged.delta.begin() + 2 * letters);
    forged.states.push_back(forged.states[1]);
    forged.delta.insert(forged.delta.end(), row.begin(), row.end());
    for (auto& t : forged.delta)
        if (t == old_fail) t = forged.fail();
    CHECK_FALSE(check_minimality(forged));
}

TEST_CASE("dot export matches the depth-1 picture of the 3-strand acceptor") {
    LexAutomaton a = build_automaton(StrandCount(3));
    const std::string dot = export_automaton(a, "dot");
    // initial state is id 0 with an empty label; sigma_2 leads to {sigma_1 sigma_2}
    CHECK(dot.find("0 [label=\"{}\"]") != std::string::npos);
    CHECK(dot.find("1 [label=\"{1 2}\"]") != std::string::npos);
    CHECK(dot.find("0 -> 0 [label=\"1\"]") != std::string::npos);
    CHECK(dot.find("0 -> 1 [label=\"2\"]") != std::string::npos);
    // the fail state is suppressed
    CHECK(dot.find("label=\"{1; 2}\"") == std::string::npos);
}

TEST_CASE("json export of the 2-strand acceptor") {
    LexAutomaton a = build_automaton(StrandCount(2));
    const std::string json = export_automaton(a, "json");
    CHECK(json.find("\"n\": 2") != std::string::npos);
    CHECK(json.find("\"initial\": 0") != std::string::npos);
    CHECK(json.find("\"fail\": 1") != std::string::npos);
    CHECK(json.find("[\n      0,\n      1,\n      0\n    ]") != std::string::npos);
    CHECK_THROWS_AS(export_automaton(a, "xml"), Error);
}

TEST_CASE("export is deterministic") {
    LexAutomaton a = build_automaton(StrandCount(5));
    CHECK(export_automaton(a, "dot") == export_automaton(build_automaton(StrandCount(5)), "dot"));
    CHECK(export_automaton(a, "json") ==
          export_automaton(build_automaton(StrandCount(5)), "json"));
}

TEST_CASE("witness distinctness") {
    CHECK(witness_distinctness(StrandCount(4)));
    CHECK(witness_distinctness(StrandCount(2)));
    CHECK(witness_distinctness(StrandCount(10)));
    CHECK_THROWS_WITH_AS(witness_distinctness(StrandCount(13)), "witness bound exceeded", Error);
    CHECK(witness_distinctness(StrandCount(13), 14));
}

TEST_CASE("accepted state count dominates 2^{n-2}") {
    for (int n = 3; n <= 10; ++n)
        CHECK(build_automaton(StrandCount(n)).accepted_count() >= (1 << (n - 2)));
}
