#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "braidgen/words.hpp"

namespace braidgen {

/// Array encoding of a minimal forbidden prefix set: f(i) in {-1,0} or
/// {1..i}, with f(1) != -1.  f(i) = 0 contributes nothing; f(i) >= 1 encodes
/// the descending run sigma_i ... sigma_{f(i)}; f(i) = -1 encodes the
/// ascending pair sigma_{i-1} sigma_i.
class AdmissibleFunction {
  public:
    AdmissibleFunction(StrandCount n, std::vector<std::int16_t> values);
    static AdmissibleFunction initial(StrandCount n);

    StrandCount strands() const { return n_; }
    int operator()(int i) const { return values_[i - 1]; }  // 1-based
    const std::vector<std::int16_t>& values() const { return values_; }

    friend bool operator==(const AdmissibleFunction& a, const AdmissibleFunction& b) {
        return a.n_ == b.n_ && a.values_ == b.values_;
    }
    friend bool operator!=(const AdmissibleFunction& a, const AdmissibleFunction& b) {
        return !(a == b);
    }

  private:
    StrandCount n_;
    std::vector<std::int16_t> values_;
};

struct AdmissibleFunctionHash {
    std::size_t operator()(const AdmissibleFunction& f) const;
};

/// One-letter transition.  Returns nullopt ("blocked") exactly when f(j) = j,
/// i.e. when appending sigma_j leaves the language of lex-representatives.
std::optional<AdmissibleFunction> step_f(const AdmissibleFunction& f, int j);

/// Folds step_f over w from the initial function; nullopt if w is not a
/// lex-representative.
std::optional<AdmissibleFunction> f_for_word(const ArtinWord& w);

/// Explicit minimal forbidden prefix set, ordered by leading index.
using ForbiddenSet = std::vector<ArtinWord>;
ForbiddenSet f_to_set(const AdmissibleFunction& f);

/// F(w, m): minimal elements of {sigma_1..sigma_m} united with the set encoded
/// by f.  last_letter is the final letter of w, or 0 for the empty word.
/// Requires 1 <= m <= n-1 and m >= last_letter - 1.  The result consists of
/// descending runs only, ordered by leading index.
ForbiddenSet restrict_m(const AdmissibleFunction& f, int last_letter, int m);

/// Same restriction in array form: out[i] is the foot of the run headed at i,
/// or 0 when index i contributes nothing.
std::vector<std::int16_t> restrict_m_function(const AdmissibleFunction& f, int last_letter,
                                              int m);

/// The witness word w_S for S a subset of {1..n-2}: the descending run from
/// sigma_{n-1}, followed for each i in S (taken in decreasing order) by the
/// ascent to sigma_i and the descent back.  Its admissible function is
/// f(1) = 0, f(j) = 1 for j-1 in S, f(j) = j otherwise.
ArtinWord build_witness(StrandCount n, const std::vector<int>& subset);

}  // namespace braidgen
