#pragma once

#include <vector>

#include "braidgen/words.hpp"

namespace braidgen {

/// A permutation braid: a positive braid in which any two strands cross at
/// most once.  It is uniquely determined by the permutation it induces;
/// pi(i) is the final position of the strand starting at position i, and its
/// length equals the inversion count of pi.
class PermBraid {
  public:
    static PermBraid identity(StrandCount n);
    /// Reads w left to right as adjacent transpositions; throws
    /// "not a permutation braid" if two strands would cross twice.
    static PermBraid from_word(const ArtinWord& w);
    static PermBraid from_permutation(StrandCount n, std::vector<int> pi);

    StrandCount strands() const { return n_; }
    int pi(int i) const { return pi_[i - 1]; }  // 1-based
    const std::vector<int>& permutation() const { return pi_; }
    int length() const;  // inversion count
    bool is_identity() const;

    /// { i : pi(i) > pi(i+1) } — the atoms sigma_i dividing this braid.
    std::vector<int> atom_prefixes() const;

    /// The lexicographically smallest word representing this braid.
    ArtinWord to_word() const;

    friend bool operator==(const PermBraid& a, const PermBraid& b) {
        return a.n_ == b.n_ && a.pi_ == b.pi_;
    }
    friend bool operator!=(const PermBraid& a, const PermBraid& b) { return !(a == b); }

  private:
    PermBraid(StrandCount n, std::vector<int> pi) : n_(n), pi_(std::move(pi)) {}
    StrandCount n_;
    std::vector<int> pi_;  // pi_[i-1] = pi(i), values 1..n
};

/// Least common multiple with respect to the prefix order.
PermBraid lcm(const PermBraid& x, const PermBraid& y);

/// The unique z with a * z = lcm(a, b), solved on the induced permutations.
PermBraid brute_complement(const PermBraid& a, const PermBraid& b);

/// Prefix test x ≼ y, implemented through brute_complement.
bool divides(const PermBraid& x, const PermBraid& y);

/// sigma_j \ beta for beta an ascending pair sigma_{i-1} sigma_i or a
/// descending run sigma_i sigma_{i-1} ... sigma_m (single atoms are runs with
/// m = i).  Other shapes raise "unsupported complement shape".
ArtinWord atom_complement(int j, const ArtinWord& beta);

}  // namespace braidgen
