#include "braidgen/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "braidgen/automaton.hpp"
#include "braidgen/counting.hpp"
#include "braidgen/growth.hpp"
#include "braidgen/oracle.hpp"
#include "braidgen/perm_braid.hpp"
#include "braidgen/prefixes.hpp"
#include "braidgen/sampler.hpp"
#include "braidgen/words.hpp"

namespace braidgen::verify {

namespace {

constexpr std::uint64_t kSuiteSeed = 0x5eedb3a1d5ull;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Fail {
    std::string message;
};

void expect(bool cond, const std::string& message) {
    if (!cond) throw Fail{message};
}

ArtinWord word(StrandCount n, std::initializer_list<int> ls) {
    std::vector<Letter> v;
    for (int l : ls) v.push_back(static_cast<Letter>(l));
    return ArtinWord(n, std::move(v));
}

std::string set_to_string(const std::vector<ArtinWord>& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += "; ";
        out += format_word(set[i]);
    }
    return out + "}";
}

// ---- criterion 1 ---------------------------------------------------------

void known_value_regression() {
    const StrandCount n4(4);
    GrowthTables g = build_growth(n4, 3);
    expect(g.x[0] == 1 && g.x[1] == 3 && g.x[2] == 8 && g.x[3] == 19,
           "|L_{4,0..3}| must be 1,3,8,19");
    const ArtinWord eps = ArtinWord::empty(n4);
    expect(count_with_prefix(3, eps, 2, g) == 4, "x_{4,3}(eps,2) != 4");
    expect(count_with_prefix(3, word(n4, {3}), 2, g) == 2, "x_{4,3}(s3,2) != 2");
    expect(count_with_prefix(3, word(n4, {3, 2}), 2, g) == 0, "x_{4,3}(s3 s2,2) != 0");
    expect(count_with_prefix(3, word(n4, {3, 2}), 1, g) == 1, "x_{4,3}(s3 s2,1) != 1");
    expect(unrank(n4, 3, 16, g) == word(n4, {3, 2, 1}), "unrank(4,3,16) != s3 s2 s1");
}

// ---- criterion 2 ---------------------------------------------------------

void example_chain_regression() {
    const StrandCount n5(5);
    const std::vector<std::vector<std::int16_t>> expected_f = {
        {1, 2, 0, -1}, {1, 0, -1, 4}, {0, -1, 3, 4}, {0, -1, 2, 4}, {0, 2, 1, 4}};
    const std::vector<std::vector<ArtinWord>> expected_sets = {
        {word(n5, {1}), word(n5, {2}), word(n5, {3, 4})},
        {word(n5, {1}), word(n5, {2, 3}), word(n5, {4})},
        {word(n5, {1, 2}), word(n5, {3}), word(n5, {4})},
        {word(n5, {1, 2}), word(n5, {3, 2}), word(n5, {4})},
        {word(n5, {2}), word(n5, {3, 2, 1}), word(n5, {4})}};
    const std::vector<int> letters = {4, 3, 2, 2, 1};
    ArtinWord w = ArtinWord::empty(n5);
    for (std::size_t step = 0; step < letters.size(); ++step) {
        w = w.appended(static_cast<Letter>(letters[step]));
        auto f = f_for_word(w);
        expect(f.has_value(), "prefix of the worked example rejected: " + format_word(w));
        expect(f->values() == expected_f[step],
               "admissible function mismatch after " + format_word(w));
        expect(f_to_set(*f) == expected_sets[step],
               "forbidden set mismatch after " + format_word(w) + ": got " +
                   set_to_string(f_to_set(*f)));
    }
}

// ---- criterion 3 ---------------------------------------------------------

void automaton_table() {
    const std::vector<int> expected = {5, 18, 56, 161, 443, 1190, 3156, 8315};
    for (int n = 3; n <= 10; ++n) {
        LexAutomaton a = build_automaton(StrandCount(n));
        expect(a.accepted_count() == expected[n - 3],
               "accepted state count mismatch at n=" + std::to_string(n) + ": got " +
                   std::to_string(a.accepted_count()));
        expect(a.accepted_count() >= (1 << (n - 2)),
               "accepted state count below 2^{n-2} at n=" + std::to_string(n));
    }
    for (int n = 2; n <= 8; ++n)
        expect(check_minimality(build_automaton(StrandCount(n))),
               "acceptor not minimal at n=" + std::to_string(n));
    for (int n = 3; n <= 10; ++n)
        expect(witness_distinctness(StrandCount(n)),
               "witness words collide at n=" + std::to_string(n));
}

// ---- criterion 4 ---------------------------------------------------------

void oracle_equivalence() {
    for (int n = 2; n <= 5; ++n) {
        const StrandCount sc(n);
        GrowthTables g = build_growth(sc, 8);
        for (int k = 0; k <= 8; ++k) {
            const auto reps = oracle::enumerate_lex_reps(sc, k);
            expect(mpz_class(reps.size()) == g.x[k],
                   "lex-rep count != x at n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }

    // Automaton acceptance against oracle membership, exhaustively over all
    // words up to length 6 (length 8 for n <= 3).
    for (int n = 2; n <= 5; ++n) {
        const StrandCount sc(n);
        LexAutomaton a = build_automaton(sc);
        const int max_len = n <= 3 ? 8 : 6;
        std::vector<ArtinWord> layer{ArtinWord::empty(sc)};
        for (int len = 0; len <= max_len; ++len) {
            for (const ArtinWord& u : layer)
                expect(accepts(a, u) == oracle::is_lex_rep(u),
                       "acceptance mismatch on '" + format_word(u) + "' at n=" +
                           std::to_string(n));
            if (len == max_len) break;
            std::vector<ArtinWord> next;
            next.reserve(layer.size() * (n - 1));
            for (const ArtinWord& u : layer)
                for (int i = 1; i <= n - 1; ++i) next.push_back(u.appended(static_cast<Letter>(i)));
            layer = std::move(next);
        }
    }

    // Minimal forbidden prefix sets against the brute-force definition.
    for (int n = 2; n <= 5; ++n) {
        const StrandCount sc(n);
        for (int len = 0; len <= 6; ++len) {
            for (const ArtinWord& w : oracle::enumerate_lex_reps(sc, len)) {
                auto f = f_for_word(w);
                expect(f.has_value(), "oracle lex-rep rejected: " + format_word(w));
                const auto fast = f_to_set(*f);
                const auto brute = oracle::brute_forbidden_min(w, n);
                expect(fast == brute, "forbidden set mismatch for '" + format_word(w) +
                                          "': fast " + set_to_string(fast) + " vs oracle " +
                                          set_to_string(brute));
            }
        }
    }

    // Prefix counts: dynamic program == inclusion-exclusion reference ==
    // direct count over the enumerated language.
    for (int n = 2; n <= 4; ++n) {
        const StrandCount sc(n);
        GrowthTables g = build_growth(sc, 7);
        for (int k = 0; k <= 7; ++k) {
            const auto reps = oracle::enumerate_lex_reps(sc, k);
            // bucket[prefix] = counts of the next letter; full words counted apart
            std::unordered_map<std::string, std::vector<long long>> next_letter;
            std::unordered_set<std::string> full;
            for (const ArtinWord& u : reps) {
                for (int p = 0; p < k; ++p) {
                    auto& counts =
                        next_letter.try_emplace(format_word(u.prefix(p)), std::vector<long long>(n, 0))
                            .first->second;
                    counts[u.letter(p)] += 1;
                }
                full.insert(format_word(u));
            }
            for (int t = 0; t <= k; ++t) {
                for (const ArtinWord& w : oracle::enumerate_lex_reps(sc, t)) {
                    const int j = w.is_empty() ? 0 : w.last();
                    const std::string key = format_word(w);
                    for (int m = std::max(j - 1, 1); m <= n - 1; ++m) {
                        mpz_class direct = full.count(key) && t == k ? 1 : 0;
                        auto it = next_letter.find(key);
                        if (it != next_letter.end())
                            for (int l = m + 1; l <= n - 1; ++l)
                                direct += static_cast<long>(it->second[l]);
                        const mpz_class dp = count_with_prefix(k, w, m, g);
                        const mpz_class ref = reference_count(k, w, m, g);
                        expect(dp == direct && ref == direct,
                               "count mismatch at n=" + std::to_string(n) + " k=" +
                                   std::to_string(k) + " w='" + key + "' m=" + std::to_string(m) +
                                   ": dp=" + dp.get_str() + " ref=" + ref.get_str() +
                                   " oracle=" + direct.get_str());
                    }
                }
            }
        }
    }
}

// ---- criterion 5 ---------------------------------------------------------

void uniformity() {
    const StrandCount n4(4);
    GrowthTables g = build_growth(n4, 6);

    SampleRequest req{n4, 3, 190000, kSuiteSeed};
    std::unordered_map<std::string, int> index;
    for (int r = 1; r <= 19; ++r) index[format_word(unrank(n4, 3, r, g))] = r - 1;
    std::vector<long long> observed(19, 0);
    for (const ArtinWord& w : sample(req, g)) {
        auto it = index.find(format_word(w));
        expect(it != index.end(), "sampled word is not a length-3 lex-representative");
        observed[it->second] += 1;
    }
    const double expected = 190000.0 / 19.0;
    double chi2 = 0.0;
    for (long long o : observed) {
        const double d = static_cast<double>(o) - expected;
        chi2 += d * d / expected;
    }
    expect(chi2 < 42.31, "chi-square statistic " + std::to_string(chi2) +
                             " exceeds the df=18 critical value 42.31");

    // Exhaustive rank/unrank round trip, cross-checked against the oracle order.
    for (int n = 2; n <= 4; ++n) {
        const StrandCount sc(n);
        GrowthTables gt = build_growth(sc, 6);
        for (int k = 0; k <= 6; ++k) {
            const auto reps = oracle::enumerate_lex_reps(sc, k);
            expect(mpz_class(reps.size()) == gt.x[k], "rank space size mismatch");
            for (std::size_t i = 0; i < reps.size(); ++i) {
                const mpz_class r = static_cast<long>(i + 1);
                expect(unrank(sc, k, r, gt) == reps[i],
                       "unrank disagrees with enumeration order at n=" + std::to_string(n) +
                           " k=" + std::to_string(k) + " r=" + r.get_str());
                expect(rank(reps[i], gt) == r, "rank(unrank(r)) != r");
            }
        }
    }
}

// ---- criterion 6 ---------------------------------------------------------

void bias_demonstration() {
    const StrandCount n4(4);
    const ArtinWord delta = word(n4, {1, 2, 1, 3, 2, 1});
    const ArtinWord power = word(n4, {1, 1, 1, 1, 1, 1});
    const auto delta_class = oracle::closure(delta);
    expect(delta_class.size() == 16, "closure of the half twist must have 16 words");
    expect(oracle::closure(power).size() == 1, "sigma_1^6 must have a singleton closure");
    std::unordered_set<std::string> delta_words;
    for (const ArtinWord& u : delta_class) delta_words.insert(format_word(u));

    RandomSource rng = RandomSource::derived(kSuiteSeed, 6);
    long long hits_delta = 0, hits_power = 0;
    const std::string power_key = format_word(power);
    for (int i = 0; i < 729000; ++i) {
        const std::string drawn = format_word(naive_sample(n4, 6, rng));
        if (drawn == power_key)
            ++hits_power;
        else if (delta_words.count(drawn))
            ++hits_delta;
    }
    expect(hits_power > 0, "no occurrences of sigma_1^6 in 729000 naive draws");
    const double ratio = static_cast<double>(hits_delta) / static_cast<double>(hits_power);
    expect(ratio >= 13.0 && ratio <= 19.0,
           "naive bias ratio " + std::to_string(ratio) + " outside [13, 19]");
}

// ---- criterion 7 ---------------------------------------------------------

double timed_draw(StrandCount n, int k, const GrowthTables& g, std::uint64_t salt) {
    RandomSource rng = RandomSource::derived(kSuiteSeed, salt);
    const mpz_class r = rng.uniform_below(g.x[k]) + 1;
    const auto t0 = std::chrono::steady_clock::now();
    ArtinWord w = unrank(n, k, r, g);
    const double dt = seconds_since(t0);
    expect(static_cast<int>(w.size()) == k, "draw has wrong length");
    return dt;
}

void desk_scale_performance(std::string& info) {
    {
        GrowthTables g = build_growth(StrandCount(64), 128);
        const double dt = timed_draw(StrandCount(64), 128, g, 1);
        expect(dt < 5.0, "draw at (n,k)=(64,128) took " + std::to_string(dt) + " s (budget 5 s)");
        info += "draw(64,128)=" + std::to_string(dt) + "s ";
    }
    {
        GrowthTables g = build_growth(StrandCount(16), 256);
        const double dt = timed_draw(StrandCount(16), 256, g, 2);
        expect(dt < 10.0, "draw at (n,k)=(16,256) took " + std::to_string(dt) + " s (budget 10 s)");
        info += "draw(16,256)=" + std::to_string(dt) + "s ";
    }
    {
        const StrandCount n4(4);
        GrowthTables g = build_growth(n4, 256);
        std::vector<double> log_k, log_t;
        for (int k : {32, 64, 128, 256}) {
            RandomSource rng = RandomSource::derived(kSuiteSeed, 100 + k);
            const auto t0 = std::chrono::steady_clock::now();
            int draws = 0;
            do {
                const mpz_class r = rng.uniform_below(g.x[k]) + 1;
                unrank(n4, k, r, g);
                ++draws;
            } while (seconds_since(t0) < 0.25 && draws < 400);
            const double mean = seconds_since(t0) / draws;
            log_k.push_back(std::log(static_cast<double>(k)));
            log_t.push_back(std::log(mean));
        }
        // least-squares slope of log t against log k
        double mk = 0, mt = 0;
        for (std::size_t i = 0; i < log_k.size(); ++i) mk += log_k[i], mt += log_t[i];
        mk /= log_k.size();
        mt /= log_t.size();
        double num = 0, den = 0;
        for (std::size_t i = 0; i < log_k.size(); ++i) {
            num += (log_k[i] - mk) * (log_t[i] - mt);
            den += (log_k[i] - mk) * (log_k[i] - mk);
        }
        const double slope = num / den;
        info += "e_k(n=4)=" + std::to_string(slope);
        expect(slope < 3.2, "per-k scaling exponent " + std::to_string(slope) +
                                " at n=4 is not below 3.2");
    }
}

// ---- criterion 8 ---------------------------------------------------------

ArtinWord concat(const ArtinWord& u, const ArtinWord& v) {
    std::vector<Letter> ls = u.letters();
    ls.insert(ls.end(), v.letters().begin(), v.letters().end());
    return ArtinWord(u.strands(), std::move(ls));
}

void lemma_differentials() {
    // Atom complements against the permutation-level oracle, exhaustively
    // over every supported shape and every atom, for n up to 8.
    for (int n = 2; n <= 8; ++n) {
        const StrandCount sc(n);
        for (int j = 1; j <= n - 1; ++j) {
            const PermBraid atom = PermBraid::from_word(word(sc, {j}));
            for (int i = 2; i <= n - 1; ++i) {
                const ArtinWord pair = word(sc, {i - 1, i});
                expect(PermBraid::from_word(atom_complement(j, pair)) ==
                           brute_complement(atom, PermBraid::from_word(pair)),
                       "pair complement mismatch n=" + std::to_string(n) + " j=" +
                           std::to_string(j) + " i=" + std::to_string(i));
            }
            for (int i = 1; i <= n - 1; ++i)
                for (int m = 1; m <= i; ++m) {
                    std::vector<Letter> run;
                    for (int c = i; c >= m; --c) run.push_back(static_cast<Letter>(c));
                    const ArtinWord beta(sc, std::move(run));
                    expect(PermBraid::from_word(atom_complement(j, beta)) ==
                               brute_complement(atom, PermBraid::from_word(beta)),
                           "run complement mismatch n=" + std::to_string(n) + " j=" +
                               std::to_string(j) + " i=" + std::to_string(i) + " m=" +
                               std::to_string(m));
                }
        }
    }

    // The three join-update rules checked against lcm for every permutation
    // braid supported on every window, n up to 6.
    for (int n = 3; n <= 6; ++n) {
        const StrandCount sc(n);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i + 1;
        do {
            const PermBraid x = PermBraid::from_permutation(sc, perm);
            for (int a = 1; a <= n; ++a)
                for (int b = a; b <= n; ++b) {
                    bool supported = true;
                    for (int i = 1; i <= n && supported; ++i) {
                        if (i < a || i > b)
                            supported = x.pi(i) == i;
                        else
                            supported = x.pi(i) >= a && x.pi(i) <= b;
                    }
                    if (!supported) continue;
                    const int r = x.pi(a) - a;
                    const int s = b - x.pi(b);
                    if (a > 1) {
                        std::vector<Letter> asc;
                        for (int c = a - 1; c <= a - 1 + r; ++c)
                            asc.push_back(static_cast<Letter>(c));
                        const PermBraid joined =
                            lcm(PermBraid::from_word(word(sc, {a - 1})), x);
                        expect(joined == PermBraid::from_word(concat(x.to_word(),
                                                                     ArtinWord(sc, asc))),
                               "join rule (left atom) product mismatch");
                        expect(joined.pi(a - 1) == a + r, "join rule (left atom) top strand");
                        const int want = (a + r < b - s) ? b - s : b - s - 1;
                        expect(joined.pi(b) == want, "join rule (left atom) bottom strand");
                    }
                    if (b < n) {
                        std::vector<Letter> desc;
                        for (int c = b; c >= b - s; --c) desc.push_back(static_cast<Letter>(c));
                        const PermBraid joined = lcm(PermBraid::from_word(word(sc, {b})), x);
                        expect(joined == PermBraid::from_word(concat(x.to_word(),
                                                                     ArtinWord(sc, desc))),
                               "join rule (right atom) product mismatch");
                        expect(joined.pi(b + 1) == b - s, "join rule (right atom) bottom strand");
                        const int want = (a + r < b - s) ? a + r : a + r + 1;
                        expect(joined.pi(a) == want, "join rule (right atom) top strand");

                        std::vector<Letter> full;
                        for (int c = b; c >= a; --c) full.push_back(static_cast<Letter>(c));
                        const ArtinWord run(sc, full);
                        const PermBraid joined_run = lcm(PermBraid::from_word(run), x);
                        expect(joined_run ==
                                   PermBraid::from_word(concat(x.to_word(), run)),
                               "join rule (full run) product mismatch");
                        expect(joined_run.pi(a) == a + r + 1, "join rule (full run) top strand");
                        expect(joined_run.pi(b + 1) == a, "join rule (full run) bottom strand");
                    }
                }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    // Every window/element configuration the scan can reach for n <= 6:
    // states of the acceptor x incoming letter x admissible m.  Each scan step
    // is compared entry-by-entry against direct subset enumeration, and the
    // sparse update against the plain one.
    for (int n = 3; n <= 6; ++n) {
        const StrandCount sc(n);
        LexAutomaton aut = build_automaton(sc);
        std::set<std::pair<int, int>> configs;  // (state, incoming letter)
        configs.emplace(aut.initial, 0);
        for (int st = 0; st < aut.accepted_count(); ++st)
            for (int l = 1; l <= n - 1; ++l) {
                const int target = aut.next(st, l);
                if (target != aut.fail()) configs.emplace(target, l);
            }
        const mpz_class bound = mpz_class(1) << n;
        for (const auto& [state, j] : configs) {
            const AdmissibleFunction& f = aut.states[state];
            for (int m = std::max(j - 1, 1); m <= n - 1; ++m) {
                WindowScan scan(f, j, m, n * (n - 1) / 2, true);
                WindowScan plain(f, j, m, n * (n - 1) / 2, false);
                while (!scan.done()) {
                    scan.advance();
                    plain.advance();
                    const int a = scan.a(), b = scan.b();
                    const auto elements = scan.window_elements();
                    std::map<std::tuple<int, int, int>, mpz_class> census;
                    const std::size_t count = elements.size();
                    for (std::uint64_t mask = 0; mask < (1ull << count); ++mask) {
                        PermBraid join = PermBraid::identity(sc);
                        for (std::size_t i = 0; i < count; ++i)
                            if (mask & (1ull << i))
                                join = lcm(join, PermBraid::from_word(elements[i]));
                        const int l = join.length();
                        const int r = join.pi(a) - a;
                        const int s = b - join.pi(b);
                        census[{l, r, s}] += (__builtin_popcountll(mask) % 2 == 0) ? 1 : -1;
                    }
                    for (int l = 0; l <= scan.l_max(); ++l)
                        for (int r = 0; r < n; ++r)
                            for (int s = 0; s < n; ++s) {
                                const mpz_class got = scan.entry(l, r, s);
                                auto it = census.find({l, r, s});
                                const mpz_class want = it == census.end() ? 0 : it->second;
                                expect(got == want,
                                       "scan entry disagrees with subset census at n=" +
                                           std::to_string(n) + " state=" + std::to_string(state) +
                                           " m=" + std::to_string(m));
                                expect(plain.entry(l, r, s) == got,
                                       "sparse and plain updates disagree at n=" +
                                           std::to_string(n));
                                expect(abs(got) < bound, "entry magnitude reaches 2^n");
                            }
                }
            }
        }
    }
}

using Body = std::function<void(std::string&)>;

void run_check(std::vector<CheckResult>& results, std::ostream& out, const std::string& name,
               double budget_seconds, const Body& body) {
    CheckResult res;
    res.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        std::string info;
        body(info);
        res.seconds = seconds_since(t0);
        res.passed = true;
        res.detail = info;
        if (budget_seconds > 0 && res.seconds >= budget_seconds) {
            res.passed = false;
            res.detail = "runtime " + std::to_string(res.seconds) + " s over the budget of " +
                         std::to_string(budget_seconds) + " s";
        }
    } catch (const Fail& f) {
        res.seconds = seconds_since(t0);
        res.passed = false;
        res.detail = f.message;
    } catch (const std::exception& e) {
        res.seconds = seconds_since(t0);
        res.passed = false;
        res.detail = std::string("exception: ") + e.what();
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (res.passed ? "[PASS] " : "[FAIL] ") << res.name << " (" << res.seconds << " s)";
    if (!res.detail.empty()) line << " — " << res.detail;
    out << line.str() << "\n" << std::flush;
    results.push_back(std::move(res));
}

}  // namespace

std::vector<CheckResult> run_acceptance(std::ostream& out) {
    std::vector<CheckResult> results;
    run_check(results, out, "1 known-value regression", 1.0,
              [](std::string&) { known_value_regression(); });
    run_check(results, out, "2 example-chain regression", 1.0,
              [](std::string&) { example_chain_regression(); });
    run_check(results, out, "3 automaton table, minimality, witnesses", 60.0,
              [](std::string&) { automaton_table(); });
    run_check(results, out, "4 oracle equivalence (exhaustive)", 600.0,
              [](std::string&) { oracle_equivalence(); });
    run_check(results, out, "5 uniformity (chi-square + round trip)", 120.0,
              [](std::string&) { uniformity(); });
    run_check(results, out, "6 naive-sampler bias ratio", 300.0,
              [](std::string&) { bias_demonstration(); });
    run_check(results, out, "7 desk-scale performance", 0.0,
              [](std::string& info) { desk_scale_performance(info); });
    run_check(results, out, "8 join-rule differentials", 0.0,
              [](std::string&) { lemma_differentials(); });
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace braidgen::verify
