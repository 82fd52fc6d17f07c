#include "braidgen/prefixes.hpp"

#include <algorithm>

namespace braidgen {

AdmissibleFunction::AdmissibleFunction(StrandCount n, std::vector<std::int16_t> values)
    : n_(n), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != n_.n - 1)
        throw Error("admissible function has wrong arity");
    for (int i = 1; i <= n_.n - 1; ++i) {
        const int v = values_[i - 1];
        if (v < -1 || v > i) throw Error("function is not admissible");
    }
    if (values_[0] == -1) throw Error("function is not admissible");
}

AdmissibleFunction AdmissibleFunction::initial(StrandCount n) {
    return AdmissibleFunction(n, std::vector<std::int16_t>(n.n - 1, 0));
}

std::size_t AdmissibleFunctionHash::operator()(const AdmissibleFunction& f) const {
    std::size_t h = 1469598103934665603ull;  // FNV-1a
    for (std::int16_t v : f.values()) {
        h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(v));
        h *= 1099511628211ull;
    }
    return h;
}

std::optional<AdmissibleFunction> step_f(const AdmissibleFunction& f, int j) {
    const int n = f.strands().n;
    if (j < 1 || j > n - 1) throw Error("generator out of range");
    if (f(j) == j) return std::nullopt;  // blocked
    std::vector<std::int16_t> g(n - 1);
    for (int i = 1; i < j - 1; ++i) g[i - 1] = static_cast<std::int16_t>(i);
    if (j >= 2) g[j - 2] = static_cast<std::int16_t>(f(j) > 0 ? f(j) : 0);
    g[j - 1] = static_cast<std::int16_t>((j == 1 || f(j) == j - 1) ? 0 : -1);
    for (int i = j + 1; i <= n - 1; ++i) {
        if (f(i) == -1)
            g[i - 1] = static_cast<std::int16_t>(i);
        else if (f(i) == j + 1)
            g[i - 1] = static_cast<std::int16_t>(j);
        else
            g[i - 1] = static_cast<std::int16_t>(f(i));
    }
    return AdmissibleFunction(f.strands(), std::move(g));
}

std::optional<AdmissibleFunction> f_for_word(const ArtinWord& w) {
    AdmissibleFunction f = AdmissibleFunction::initial(w.strands());
    for (Letter l : w.letters()) {
        auto next = step_f(f, l);
        if (!next) return std::nullopt;
        f = std::move(*next);
    }
    return f;
}

namespace {

ArtinWord descending_run(StrandCount n, int head, int foot) {
    std::vector<Letter> ls;
    for (int c = head; c >= foot; --c) ls.push_back(static_cast<Letter>(c));
    return ArtinWord(n, std::move(ls));
}

}  // namespace

ForbiddenSet f_to_set(const AdmissibleFunction& f) {
    const StrandCount n = f.strands();
    ForbiddenSet out;
    for (int i = 1; i <= n.n - 1; ++i) {
        if (f(i) >= 1) {
            out.push_back(descending_run(n, i, f(i)));
        } else if (f(i) == -1) {
            out.push_back(ArtinWord(n, {static_cast<Letter>(i - 1), static_cast<Letter>(i)}));
        }
    }
    return out;
}

std::vector<std::int16_t> restrict_m_function(const AdmissibleFunction& f, int last_letter,
                                              int m) {
    const int n = f.strands().n;
    if (last_letter < 0 || last_letter > n - 1) throw Error("generator out of range");
    if (m < 1 || m > n - 1 || (last_letter > 0 && m < last_letter - 1))
        throw Error("m out of supported range");
    std::vector<std::int16_t> out(n - 1, 0);
    for (int i = 1; i <= m; ++i) out[i - 1] = static_cast<std::int16_t>(i);
    for (int i = m + 1; i <= n - 1; ++i) {
        // Runs headed above m survive; an ascending pair is a multiple of the
        // atom at its leading index i-1 <= m and drops out.
        if (f(i) >= 1)
            out[i - 1] = static_cast<std::int16_t>(f(i));
        else if (f(i) == -1 && i - 1 > m)
            throw Error("m out of supported range");
    }
    return out;
}

ForbiddenSet restrict_m(const AdmissibleFunction& f, int last_letter, int m) {
    const StrandCount n = f.strands();
    std::vector<std::int16_t> feet = restrict_m_function(f, last_letter, m);
    ForbiddenSet out;
    for (int i = 1; i <= n.n - 1; ++i)
        if (feet[i - 1] >= 1) out.push_back(descending_run(n, i, feet[i - 1]));
    return out;
}

ArtinWord build_witness(StrandCount n, const std::vector<int>& subset) {
    std::vector<int> s = subset;
    for (int i : s)
        if (i < 1 || i > n.n - 2) throw Error("witness index out of range");
    std::sort(s.begin(), s.end(), std::greater<int>());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<Letter> ls;
    for (int c = n.n - 1; c >= 1; --c) ls.push_back(static_cast<Letter>(c));
    for (int i : s) {
        for (int c = 1; c <= i; ++c) ls.push_back(static_cast<Letter>(c));
        for (int c = i; c >= 1; --c) ls.push_back(static_cast<Letter>(c));
    }
    return ArtinWord(n, std::move(ls));
}

}  // namespace braidgen
