#pragma once

#include <vector>

#include "braidgen/words.hpp"

namespace braidgen::oracle {

/// Desk-scale safety bounds.  The environment variable BRAIDGEN_ORACLE_MAX,
/// when set to an integer V, replaces all three limits by V.
struct Limits {
    int max_word_len = 12;   // normalize / closure
    int max_enum_n = 5;      // enumerate_lex_reps
    int max_enum_k = 9;
};
Limits limits();

/// All words equivalent to w under the braid relations (breadth-first closure),
/// sorted lexicographically.  Word length is preserved throughout.
std::vector<ArtinWord> closure(const ArtinWord& w);

/// The lexicographically least word in the relation-closure of w.
ArtinWord normalize(const ArtinWord& w);

/// Early-exit membership test: false as soon as the closure produces a
/// smaller word.
bool is_lex_rep(const ArtinWord& w);

/// All lex-representatives of length k, in lexicographic order, built
/// incrementally from length k-1.
std::vector<ArtinWord> enumerate_lex_reps(StrandCount n, int k);

/// Minimal forbidden prefixes after w, straight from the definition:
/// enumerate braids alpha of length <= length_bound as lex-reps, keep the
/// forbidden ones with no forbidden proper braid-prefix.
std::vector<ArtinWord> brute_forbidden_min(const ArtinWord& w, int length_bound);

}  // namespace braidgen::oracle
