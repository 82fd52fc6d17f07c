#include "braidgen/growth.hpp"

#include <fstream>
#include <sstream>

namespace braidgen {

namespace {

long long choose2(long long i) { return i * (i - 1) / 2; }

int row_top(int m, int k_max) {
    return static_cast<int>(std::min<long long>(k_max, choose2(m)));
}

const mpz_class& zero() {
    static const mpz_class z = 0;
    return z;
}

const mpz_class& h_lookup(const std::vector<std::vector<mpz_class>>& h, int m, int j) {
    if (j < 0 || j >= static_cast<int>(h[m].size())) return zero();
    return h[m][j];
}

void extend_h(std::vector<std::vector<mpz_class>>& h, int n, int k_max) {
    if (static_cast<int>(h.size()) < n + 1) h.resize(n + 1);
    for (int m = 0; m <= n; ++m) {
        const int top = row_top(m, k_max);
        int j = static_cast<int>(h[m].size());
        h[m].resize(top + 1);
        for (; j <= top; ++j) {
            if (j == 0) {
                h[m][0] = 1;
                continue;
            }
            mpz_class acc = 0;
            for (int i = 1; i <= m; ++i) {
                long long shift = choose2(i);
                if (shift > j) break;  // C(i,2) is increasing in i
                if (i % 2 == 1)
                    acc += h_lookup(h, m - i, j - static_cast<int>(shift));
                else
                    acc -= h_lookup(h, m - i, j - static_cast<int>(shift));
            }
            h[m][j] = acc;
        }
    }
}

void extend_x(std::vector<mpz_class>& x, const std::vector<std::vector<mpz_class>>& h,
              int n, int k_max) {
    int j = static_cast<int>(x.size());
    x.resize(k_max + 1);
    for (; j <= k_max; ++j) {
        if (j == 0) {
            x[0] = 1;
            continue;
        }
        mpz_class acc = 0;
        const int terms = std::min<int>(j, static_cast<int>(h[n].size()) - 1);
        for (int t = 1; t <= terms; ++t) acc += x[j - t] * h[n][t];
        x[j] = -acc;
    }
}

}  // namespace

const mpz_class& GrowthTables::h_at(int m, int j) const {
    if (m < 0 || m > n) throw Error("h row out of range");
    return h_lookup(h, m, j);
}

std::vector<std::vector<mpz_class>> build_h(StrandCount n, int k_max) {
    std::vector<std::vector<mpz_class>> h;
    extend_h(h, n.n, k_max);
    return h;
}

std::vector<mpz_class> build_x(StrandCount n, int k_max,
                               const std::vector<std::vector<mpz_class>>& h) {
    std::vector<mpz_class> x;
    extend_x(x, h, n.n, k_max);
    return x;
}

GrowthTables build_growth(StrandCount n, int k_max) {
    if (k_max < 0) throw Error("k_max must be non-negative");
    GrowthTables t;
    t.n = n.n;
    t.k_max = k_max;
    t.h = build_h(n, k_max);
    t.x = build_x(n, k_max, t.h);
    return t;
}

void extend_growth(GrowthTables& tables, int new_k_max) {
    if (new_k_max <= tables.k_max) return;
    extend_h(tables.h, tables.n, new_k_max);
    extend_x(tables.x, tables.h, tables.n, new_k_max);
    tables.k_max = new_k_max;
}

void save_cache(const GrowthTables& tables, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write cache file: " + path.string());
    out << "braidgen-growth v1 n=" << tables.n << " kmax=" << tables.k_max << '\n';
    for (int m = 0; m <= tables.n; ++m) {
        for (std::size_t j = 0; j < tables.h[m].size(); ++j) {
            if (j) out << ' ';
            out << tables.h[m][j];
        }
        out << '\n';
    }
    for (std::size_t j = 0; j < tables.x.size(); ++j) {
        if (j) out << ' ';
        out << tables.x[j];
    }
    out << '\n';
    if (!out) throw Error("cannot write cache file: " + path.string());
}

GrowthTables load_cache(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cache invalid");
    std::string header;
    std::getline(in, header);
    int n = 0, k_max = -1;
    if (std::sscanf(header.c_str(), "braidgen-growth v1 n=%d kmax=%d", &n, &k_max) != 2 ||
        n < 2 || k_max < 0)
        throw Error("cache invalid");
    GrowthTables t;
    t.n = n;
    t.k_max = k_max;
    t.h.resize(n + 1);
    std::string line;
    for (int m = 0; m <= n; ++m) {
        if (!std::getline(in, line)) throw Error("cache invalid");
        std::istringstream row(line);
        std::string tok;
        while (row >> tok) {
            mpz_class v;
            if (v.set_str(tok, 10) != 0) throw Error("cache invalid");
            t.h[m].push_back(v);
        }
        if (static_cast<int>(t.h[m].size()) != row_top(m, k_max) + 1)
            throw Error("cache invalid");
    }
    if (!std::getline(in, line)) throw Error("cache invalid");
    {
        std::istringstream row(line);
        std::string tok;
        while (row >> tok) {
            mpz_class v;
            if (v.set_str(tok, 10) != 0) throw Error("cache invalid");
            t.x.push_back(v);
        }
    }
    if (static_cast<int>(t.x.size()) != k_max + 1) throw Error("cache invalid");
    if (t.x[0] != 1) throw Error("cache invalid");
    return t;
}

GrowthTables load_or_build(StrandCount n, int k_max,
                           const std::optional<std::filesystem::path>& cache) {
    if (cache && std::filesystem::exists(*cache)) {
        try {
            GrowthTables t = load_cache(*cache);
            if (t.n == n.n) {
                if (t.k_max < k_max) {
                    extend_growth(t, k_max);
                    save_cache(t, *cache);
                }
                return t;
            }
        } catch (const Error&) {
            // fall through and rebuild
        }
    }
    GrowthTables t = build_growth(n, k_max);
    if (cache) {
        std::error_code ec;
        std::filesystem::create_directories(cache->parent_path(), ec);
        try {
            save_cache(t, *cache);
        } catch (const Error&) {
            // cache is a convenience; computation result stands on its own
        }
    }
    return t;
}

}  // namespace braidgen
