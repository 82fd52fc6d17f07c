#pragma once

#include <gmpxx.h>

#include <filesystem>
#include <optional>
#include <vector>

#include "braidgen/words.hpp"

namespace braidgen {

/// Coefficient tables for counting positive braids by length: h[m][j] are the
/// coefficients of the polynomials H_m (growth series denominators), x[j] the
/// number of positive braids of length j on n strands.  Rows of h are stored
/// up to their degree m(m-1)/2; entries beyond are zero.
struct GrowthTables {
    int n = 0;
    int k_max = 0;
    std::vector<std::vector<mpz_class>> h;  // h[m], 0 <= m <= n
    std::vector<mpz_class> x;               // x[j], 0 <= j <= k_max

    const mpz_class& h_at(int m, int j) const;
};

/// h[m][j] = sum_{i=1..m} (-1)^{i+1} h[m-i][j - C(i,2)], seeded by H_0 = H_1 = 1.
std::vector<std::vector<mpz_class>> build_h(StrandCount n, int k_max);

/// x[0] = 1; x[j] = -(x[j-1] h[n][1] + ... + x[0] h[n][j]).
std::vector<mpz_class> build_x(StrandCount n, int k_max,
                               const std::vector<std::vector<mpz_class>>& h);

GrowthTables build_growth(StrandCount n, int k_max);

/// Extends existing tables to a larger k_max in place; entries already
/// computed are never touched.
void extend_growth(GrowthTables& tables, int new_k_max);

/// Versioned plain-text cache: header "braidgen-growth v1 n=<n> kmax=<k>",
/// then the h rows, then the x row, decimal integers.
void save_cache(const GrowthTables& tables, const std::filesystem::path& path);

/// Throws "cache invalid" on a corrupt or version-mismatched file.
GrowthTables load_cache(const std::filesystem::path& path);

/// Loads the cache when present and usable (extending it as needed), builds
/// from scratch otherwise; writes the result back when a path is given.
GrowthTables load_or_build(StrandCount n, int k_max,
                           const std::optional<std::filesystem::path>& cache);

}  // namespace braidgen
