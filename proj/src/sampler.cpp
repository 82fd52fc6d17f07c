#include "braidgen/sampler.hpp"

#include "braidgen/prefixes.hpp"

namespace braidgen {

RandomSource RandomSource::derived(std::uint64_t master_seed, std::uint64_t index) {
    // splitmix64 finalizer
    std::uint64_t z = master_seed ^ (index + 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z = z ^ (z >> 31);
    return RandomSource(z);
}

mpz_class RandomSource::uniform_below(const mpz_class& bound) {
    if (bound <= 0) throw Error("uniform_below requires a positive bound");
    if (bound == 1) return 0;
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    std::vector<std::uint64_t> block(words);
    mpz_class candidate;
    for (;;) {
        for (auto& w : block) w = next_u64();
        if (bits % 64) block[words - 1] &= (1ull << (bits % 64)) - 1;
        mpz_import(candidate.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, block.data());
        if (candidate < bound) return candidate;
    }
}

ArtinWord unrank(StrandCount n, int k, const mpz_class& r, const GrowthTables& g) {
    if (g.n != n.n) throw Error("growth tables built for a different strand count");
    if (k < 0) throw Error("length must be non-negative");
    if (g.k_max < k) throw Error("growth tables do not cover the requested length");
    if (r < 1 || r > g.x[k]) throw Error("rank out of range");

    mpz_class nu = g.x[k] - r;  // words of L_{n,k} after the target
    std::vector<Letter> letters;
    letters.reserve(k);
    ArtinWord w = ArtinWord::empty(n);
    AdmissibleFunction f = AdmissibleFunction::initial(n);
    CountWorkspace ws;
    int a = 0;
    for (int pos = 0; pos < k; ++pos) {
        a = std::max(a - 1, 1);
        int b = n.n - 1;
        mpz_class mu = 0;  // x_{n,k}(w, b) throughout the search
        while (a < b) {
            const int m = (a + b) / 2;
            mpz_class c = count_with_prefix(k, w, m, g, &f, &ws);
            if (c <= nu) {
                b = m;
                mu = std::move(c);
            } else {
                a = m + 1;
            }
        }
        w = w.appended(static_cast<Letter>(a));
        auto next = step_f(f, a);
        if (!next) throw Error("internal error: search landed on a blocked letter");
        f = std::move(*next);
        nu -= mu;
    }
    return w;
}

mpz_class rank(const ArtinWord& w, const GrowthTables& g) {
    const StrandCount n = w.strands();
    if (g.n != n.n) throw Error("growth tables built for a different strand count");
    const int k = static_cast<int>(w.size());
    if (g.k_max < k) throw Error("growth tables do not cover the requested length");

    mpz_class greater = 0;  // words of L_{n,k} after w
    ArtinWord prefix = ArtinWord::empty(n);
    AdmissibleFunction f = AdmissibleFunction::initial(n);
    CountWorkspace ws;
    for (int pos = 0; pos < k; ++pos) {
        const int letter = w.letter(pos);
        auto next = step_f(f, letter);
        if (!next) throw Error("not a lex-representative");
        greater += count_with_prefix(k, prefix, letter, g, &f, &ws);
        prefix = prefix.appended(static_cast<Letter>(letter));
        f = std::move(*next);
    }
    return g.x[k] - greater;
}

std::vector<ArtinWord> sample(const SampleRequest& req, const GrowthTables& g) {
    if (req.count < 1) throw Error("sample count must be at least 1");
    if (req.k < 0) throw Error("length must be non-negative");
    if (g.n != req.n.n) throw Error("growth tables built for a different strand count");
    if (g.k_max < req.k) throw Error("growth tables do not cover the requested length");
    const std::uint64_t master = req.seed ? *req.seed : std::random_device{}();
    std::vector<ArtinWord> out;
    out.reserve(req.count);
    for (long long i = 0; i < req.count; ++i) {
        RandomSource rng = RandomSource::derived(master, static_cast<std::uint64_t>(i));
        const mpz_class r = rng.uniform_below(g.x[req.k]) + 1;
        out.push_back(unrank(req.n, req.k, r, g));
    }
    return out;
}

ArtinWord naive_sample(StrandCount n, int k, RandomSource& rng) {
    std::vector<Letter> letters;
    letters.reserve(k);
    const mpz_class alphabet = n.n - 1;
    for (int i = 0; i < k; ++i) {
        const mpz_class pick = rng.uniform_below(alphabet);
        letters.push_back(static_cast<Letter>(pick.get_ui() + 1));
    }
    return ArtinWord(n, std::move(letters));
}

}  // namespace braidgen
