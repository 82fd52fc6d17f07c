#include "braidgen/perm_braid.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace braidgen {

PermBraid PermBraid::identity(StrandCount n) {
    std::vector<int> pi(n.n);
    std::iota(pi.begin(), pi.end(), 1);
    return PermBraid(n, std::move(pi));
}

PermBraid PermBraid::from_word(const ArtinWord& w) {
    const int n = w.strands().n;
    // pos[p] = strand currently at position p+1
    std::vector<int> pos(n);
    std::iota(pos.begin(), pos.end(), 1);
    std::vector<bool> crossed(static_cast<std::size_t>(n) * n, false);
    for (Letter l : w.letters()) {
        int u = pos[l - 1], v = pos[l];
        int lo = std::min(u, v) - 1, hi = std::max(u, v) - 1;
        std::size_t key = static_cast<std::size_t>(lo) * n + hi;
        if (crossed[key]) throw Error("not a permutation braid");
        crossed[key] = true;
        std::swap(pos[l - 1], pos[l]);
    }
    std::vector<int> pi(n);
    for (int p = 0; p < n; ++p) pi[pos[p] - 1] = p + 1;
    return PermBraid(w.strands(), std::move(pi));
}

PermBraid PermBraid::from_permutation(StrandCount n, std::vector<int> pi) {
    if (static_cast<int>(pi.size()) != n.n) throw Error("permutation size mismatch");
    std::vector<bool> seen(n.n, false);
    for (int v : pi) {
        if (v < 1 || v > n.n || seen[v - 1]) throw Error("not a permutation");
        seen[v - 1] = true;
    }
    return PermBraid(n, std::move(pi));
}

int PermBraid::length() const {
    int inv = 0;
    const int n = n_.n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pi_[i] > pi_[j]) ++inv;
    return inv;
}

bool PermBraid::is_identity() const {
    for (int i = 0; i < n_.n; ++i)
        if (pi_[i] != i + 1) return false;
    return true;
}

std::vector<int> PermBraid::atom_prefixes() const {
    std::vector<int> out;
    for (int i = 1; i < n_.n; ++i)
        if (pi(i) > pi(i + 1)) out.push_back(i);
    return out;
}

ArtinWord PermBraid::to_word() const {
    // Greedily taking the smallest descent yields the lex-minimal word.
    std::vector<int> p = pi_;
    const int n = n_.n;
    std::vector<Letter> letters;
    for (;;) {
        int i = 0;
        while (i + 1 < n && p[i] < p[i + 1]) ++i;
        if (i + 1 >= n) break;
        letters.push_back(static_cast<Letter>(i + 1));
        std::swap(p[i], p[i + 1]);
    }
    return ArtinWord(n_, std::move(letters));
}

namespace {

// Inversion set as a boolean matrix over pairs i < j (1-based strands).
std::vector<bool> inversions(const PermBraid& x) {
    const int n = x.strands().n;
    std::vector<bool> inv(static_cast<std::size_t>(n) * n, false);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (x.pi(i) > x.pi(j)) inv[static_cast<std::size_t>(i - 1) * n + (j - 1)] = true;
    return inv;
}

PermBraid from_inversions(StrandCount n, const std::vector<bool>& inv) {
    const int nn = n.n;
    std::vector<int> pi(nn);
    for (int i = 1; i <= nn; ++i) {
        int later = 0, earlier = 0;
        for (int j = i + 1; j <= nn; ++j)
            if (inv[static_cast<std::size_t>(i - 1) * nn + (j - 1)]) ++later;
        for (int j = 1; j < i; ++j)
            if (inv[static_cast<std::size_t>(j - 1) * nn + (i - 1)]) ++earlier;
        pi[i - 1] = i + later - earlier;
    }
    return PermBraid::from_permutation(n, std::move(pi));
}

}  // namespace

PermBraid lcm(const PermBraid& x, const PermBraid& y) {
    if (x.strands() != y.strands()) throw Error("alphabet mismatch");
    const int n = x.strands().n;
    std::vector<bool> inv = inversions(x);
    std::vector<bool> iy = inversions(y);
    for (std::size_t i = 0; i < inv.size(); ++i) inv[i] = inv[i] || iy[i];
    // Transitive closure: (i,m) and (m,j) crossed force (i,j) crossed.
    for (int m = 2; m < n; ++m)
        for (int i = 1; i < m; ++i) {
            if (!inv[static_cast<std::size_t>(i - 1) * n + (m - 1)]) continue;
            for (int j = m + 1; j <= n; ++j)
                if (inv[static_cast<std::size_t>(m - 1) * n + (j - 1)])
                    inv[static_cast<std::size_t>(i - 1) * n + (j - 1)] = true;
        }
    return from_inversions(x.strands(), inv);
}

PermBraid brute_complement(const PermBraid& a, const PermBraid& b) {
    const PermBraid join = lcm(a, b);
    const int n = a.strands().n;
    // join = a * z, so pi_join = pi_z o pi_a.
    std::vector<int> inv_a(n), piz(n);
    for (int i = 1; i <= n; ++i) inv_a[a.pi(i) - 1] = i;
    for (int p = 1; p <= n; ++p) piz[p - 1] = join.pi(inv_a[p - 1]);
    PermBraid z = PermBraid::from_permutation(a.strands(), std::move(piz));
    assert(z.length() == join.length() - a.length());
    return z;
}

bool divides(const PermBraid& x, const PermBraid& y) {
    if (x.strands() != y.strands()) throw Error("alphabet mismatch");
    const PermBraid z = brute_complement(x, y);
    if (z.length() != y.length() - x.length()) return false;
    // x * z must equal y.
    for (int i = 1; i <= x.strands().n; ++i)
        if (z.pi(x.pi(i)) != y.pi(i)) return false;
    return true;
}

namespace {

bool is_ascending_pair(const ArtinWord& b) {
    return b.size() == 2 && b.letter(1) == b.letter(0) + 1;
}

bool is_descending_run(const ArtinWord& b) {
    if (b.is_empty()) return false;
    for (std::size_t p = 1; p < b.size(); ++p)
        if (b.letter(p) != b.letter(p - 1) - 1) return false;
    return true;
}

ArtinWord descending_run(StrandCount n, int head, int foot) {
    std::vector<Letter> ls;
    for (int c = head; c >= foot; --c) ls.push_back(static_cast<Letter>(c));
    return ArtinWord(n, std::move(ls));
}

}  // namespace

ArtinWord atom_complement(int j, const ArtinWord& beta) {
    const StrandCount n = beta.strands();
    if (j < 1 || j > n.n - 1) throw Error("generator out of range");
    if (is_ascending_pair(beta)) {
        const int i = beta.letter(1);
        if (j == i - 2)
            return ArtinWord(n, {static_cast<Letter>(i - 1), static_cast<Letter>(i),
                                 static_cast<Letter>(i - 2), static_cast<Letter>(i - 1)});
        if (j == i - 1) return ArtinWord(n, {static_cast<Letter>(i)});
        if (j == i + 1)
            return ArtinWord(n, {static_cast<Letter>(i - 1), static_cast<Letter>(i),
                                 static_cast<Letter>(i + 1)});
        return beta;
    }
    if (is_descending_run(beta)) {
        const int i = beta.letter(0);
        const int m = beta.last();
        if (j == m - 1) return descending_run(n, i, m - 1);
        if (j == i) return descending_run(n, i - 1, m);  // empty when beta is the atom sigma_i
        if (j == i + 1) {
            std::vector<Letter> ls;
            for (int c = i; c >= m; --c) {
                ls.push_back(static_cast<Letter>(c));
                ls.push_back(static_cast<Letter>(c + 1));
            }
            return ArtinWord(n, std::move(ls));
        }
        return beta;
    }
    throw Error("unsupported complement shape");
}

}  // namespace braidgen
