#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "braidgen/prefixes.hpp"
#include "braidgen/words.hpp"

namespace braidgen {

/// Deterministic acceptor for the language of lex-representatives.  Accepted
/// state ids are 0..states.size()-1 in breadth-first discovery order (0 is
/// the initial state); the explicit fail state sits at id states.size() and
/// absorbs every transition out of itself.
struct LexAutomaton {
    StrandCount n;
    std::vector<AdmissibleFunction> states;  // accepted states, keyed by their function
    std::vector<std::int32_t> delta;         // states.size() x (n-1), row-major
    int initial = 0;

    int fail() const { return static_cast<int>(states.size()); }
    int accepted_count() const { return static_cast<int>(states.size()); }
    int next(int state, int letter) const {
        if (state == fail()) return state;
        return delta[static_cast<std::size_t>(state) * (n.n - 1) + (letter - 1)];
    }
};

/// Breadth-first closure of the one-letter transition from the initial
/// function.  State counts grow exponentially in n, so n above the ceiling is
/// refused rather than exhausting memory.
LexAutomaton build_automaton(StrandCount n, int ceiling = 16);

bool accepts(const LexAutomaton& a, const ArtinWord& w);

/// Number of accepted length-k paths; equals the number of positive braids of
/// length k.
mpz_class path_count(const LexAutomaton& a, int k);

/// Partition refinement over all states including fail; true iff no two
/// states merge.
bool check_minimality(const LexAutomaton& a);

/// "dot" (fail state suppressed, as in the usual pictures) or "json".
std::string export_automaton(const LexAutomaton& a, const std::string& format);

/// True iff the 2^{n-2} witness words land on pairwise distinct states.
bool witness_distinctness(StrandCount n, int bound = 12);

}  // namespace braidgen
