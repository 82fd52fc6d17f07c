#pragma once

#include <gmpxx.h>

#include <memory>

#include "braidgen/growth.hpp"
#include "braidgen/prefixes.hpp"
#include "braidgen/words.hpp"

namespace braidgen {

/// Reusable scratch buffers for count_with_prefix.  A caller issuing many
/// counts (the sampler does one per binary-search probe) should keep one of
/// these alive; the cleared state is maintained incrementally instead of
/// re-zeroing the full array on every call.
struct CountWorkspace {
    CountWorkspace();
    ~CountWorkspace();
    CountWorkspace(CountWorkspace&&) noexcept;
    CountWorkspace& operator=(CountWorkspace&&) noexcept;
    struct Impl;
    std::unique_ptr<Impl> impl;
};

/// x_{n,k}(w, m): the number of length-k lex-representatives extending w
/// whose continuation does not start with sigma_1..sigma_m, evaluated by the
/// boundary-strand window scan.  Requires 1 <= m <= n-1 and m >= j-1 for w
/// ending in sigma_j; returns 0 when |w| > k or w is not a lex-representative.
/// A precomputed admissible function for w skips the per-call prefix pass;
/// sparse=false switches to the plain full-array update for differential
/// testing.
mpz_class count_with_prefix(int k, const ArtinWord& w, int m, const GrowthTables& g,
                            const AdmissibleFunction* fw = nullptr,
                            CountWorkspace* ws = nullptr, bool sparse = true);

/// Same value by explicit inclusion-exclusion over subsets of the forbidden
/// set, with least common multiples computed on permutation braids.  The
/// independent reference for count_with_prefix.
mpz_class reference_count(int k, const ArtinWord& w, int m, const GrowthTables& g,
                          int subset_bound = 20);

/// Step-exposed window scan with exact integer entries, for instrumentation
/// and differential tests.  Mirrors exactly what count_with_prefix runs.
class WindowScan {
  public:
    WindowScan(const AdmissibleFunction& f, int last_letter, int m, int l_cap, bool sparse);
    ~WindowScan();
    WindowScan(WindowScan&&) noexcept;

    bool done() const;
    void advance();

    int a() const;
    int b() const;
    int alpha() const;
    int l_max() const;
    mpz_class entry(int l, int r, int s) const;
    mpz_class layer_total(int l) const;

    /// Forbidden elements contained in the current window, as words.
    std::vector<ArtinWord> window_elements() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl;
};

}  // namespace braidgen
