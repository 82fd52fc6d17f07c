#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "braidgen/counting.hpp"
#include "braidgen/growth.hpp"
#include "braidgen/words.hpp"

namespace braidgen {

/// Seedable supplier of uniform bits.  uniform_below rejects whole bit blocks,
/// so the result is exactly uniform given ideal input bits; replay under the
/// same seed is deterministic.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

    /// Independent stream for draw number `index` of a batch: splitmix64 of
    /// the master seed xored with the index.  This is the documented split
    /// rule; any partition of draws over workers reproduces the same output.
    static RandomSource derived(std::uint64_t master_seed, std::uint64_t index);

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform integer in [0, bound) for bound >= 1, via rejection sampling
    /// on fixed-size bit blocks.
    mpz_class uniform_below(const mpz_class& bound);

  private:
    std::mt19937_64 eng_;
};

struct SampleRequest {
    StrandCount n;
    int k = 0;
    long long count = 1;
    std::optional<std::uint64_t> seed;
};

/// The r-th element of L_{n,k} in lexicographic order, 1 <= r <= x_{n,k}.
ArtinWord unrank(StrandCount n, int k, const mpz_class& r, const GrowthTables& g);

/// Inverse of unrank; requires w to be a lex-representative.
mpz_class rank(const ArtinWord& w, const GrowthTables& g);

/// count independent uniform draws from the positive braids of length k,
/// each returned as its lex-representative word.
std::vector<ArtinWord> sample(const SampleRequest& req, const GrowthTables& g);

/// The biased baseline: k independent uniform letters.  Not a uniform braid.
ArtinWord naive_sample(StrandCount n, int k, RandomSource& rng);

}  // namespace braidgen
