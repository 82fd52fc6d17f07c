#include "braidgen/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_set>

namespace braidgen::oracle {

Limits limits() {
    Limits lim;
    if (const char* env = std::getenv("BRAIDGEN_ORACLE_MAX")) {
        int v = std::atoi(env);
        if (v > 0) lim = Limits{v, v, v};
    }
    return lim;
}

namespace {

// Words are byte strings of letter values while exploring; cheap to hash.
std::string pack(const ArtinWord& w) {
    std::string s;
    s.reserve(w.size());
    for (Letter l : w.letters()) s.push_back(static_cast<char>(l));
    return s;
}

ArtinWord unpack(const std::string& s, StrandCount n) {
    std::vector<Letter> ls;
    ls.reserve(s.size());
    for (char c : s) ls.push_back(static_cast<Letter>(static_cast<unsigned char>(c)));
    return ArtinWord(n, std::move(ls));
}

template <class Visit>
void explore(const std::string& start, Visit&& visit) {
    std::unordered_set<std::string> seen{start};
    std::deque<std::string> queue{start};
    if (!visit(start)) return;
    bool stop = false;
    auto push = [&](std::string v) {
        if (stop || !seen.insert(v).second) return;
        if (!visit(v)) {
            stop = true;
            return;
        }
        queue.push_back(std::move(v));
    };
    while (!queue.empty() && !stop) {
        std::string u = std::move(queue.front());
        queue.pop_front();
        const std::size_t len = u.size();
        for (std::size_t i = 0; i + 1 < len && !stop; ++i) {
            int d = u[i] - u[i + 1];
            if (d >= 2 || d <= -2) {
                std::string v = u;
                std::swap(v[i], v[i + 1]);
                push(std::move(v));
            }
        }
        for (std::size_t i = 0; i + 2 < len && !stop; ++i) {
            if (u[i] == u[i + 2] && (u[i] - u[i + 1] == 1 || u[i + 1] - u[i] == 1)) {
                // x y x -> y x y
                std::string v = u;
                std::swap(v[i], v[i + 1]);
                v[i + 2] = v[i];
                push(std::move(v));
            }
        }
    }
}

void check_len(const ArtinWord& w) {
    if (static_cast<int>(w.size()) > limits().max_word_len)
        throw Error("word too long for oracle");
}

}  // namespace

std::vector<ArtinWord> closure(const ArtinWord& w) {
    check_len(w);
    std::vector<std::string> all;
    explore(pack(w), [&](const std::string& u) {
        all.push_back(u);
        return true;
    });
    std::sort(all.begin(), all.end());
    std::vector<ArtinWord> out;
    out.reserve(all.size());
    for (const auto& s : all) out.push_back(unpack(s, w.strands()));
    return out;
}

ArtinWord normalize(const ArtinWord& w) {
    check_len(w);
    std::string best = pack(w);
    explore(pack(w), [&](const std::string& u) {
        if (u < best) best = u;
        return true;
    });
    return unpack(best, w.strands());
}

bool is_lex_rep(const ArtinWord& w) {
    check_len(w);
    const std::string start = pack(w);
    bool minimal = true;
    explore(start, [&](const std::string& u) {
        if (u < start) {
            minimal = false;
            return false;
        }
        return true;
    });
    return minimal;
}

std::vector<ArtinWord> enumerate_lex_reps(StrandCount n, int k) {
    const Limits lim = limits();
    if (k < 0 || n.n > lim.max_enum_n || k > lim.max_enum_k)
        throw Error("oracle bounds exceeded");
    std::vector<ArtinWord> layer{ArtinWord::empty(n)};
    for (int len = 1; len <= k; ++len) {
        std::vector<ArtinWord> next;
        for (const ArtinWord& w : layer) {
            for (int i = 1; i <= n.n - 1; ++i) {
                ArtinWord cand = w.appended(static_cast<Letter>(i));
                if (is_lex_rep(cand)) next.push_back(std::move(cand));
            }
        }
        layer = std::move(next);
    }
    return layer;  // lexicographic by construction
}

std::vector<ArtinWord> brute_forbidden_min(const ArtinWord& w, int length_bound) {
    check_len(w);
    const StrandCount n = w.strands();
    struct Kept {
        ArtinWord word;
        std::unordered_set<std::string> reps;  // all words representing it
    };
    std::vector<Kept> kept;

    for (int len = 1; len <= length_bound; ++len) {
        for (const ArtinWord& alpha : enumerate_lex_reps(n, len)) {
            // alpha is non-minimal outright if a kept braid divides it:
            // some representative word of alpha starts with a representative
            // of the kept braid.
            std::vector<ArtinWord> cls = closure(alpha);
            bool dominated = false;
            for (const Kept& kb : kept) {
                const std::size_t plen = kb.word.size();
                for (const ArtinWord& rep : cls) {
                    std::string p = pack(rep).substr(0, plen);
                    if (kb.reps.count(p)) {
                        dominated = true;
                        break;
                    }
                }
                if (dominated) break;
            }
            if (dominated) continue;
            std::vector<Letter> joined = w.letters();
            const auto& al = alpha.letters();
            joined.insert(joined.end(), al.begin(), al.end());
            if (!is_lex_rep(ArtinWord(n, std::move(joined)))) {
                std::unordered_set<std::string> reps;
                for (const ArtinWord& rep : cls) reps.insert(pack(rep));
                kept.push_back(Kept{alpha, std::move(reps)});
            }
        }
    }
    std::vector<ArtinWord> out;
    out.reserve(kept.size());
    for (Kept& kb : kept) out.push_back(std::move(kb.word));
    std::sort(out.begin(), out.end(), [](const ArtinWord& a, const ArtinWord& b) {
        return lex_compare(a, b) == Ordering::less;
    });
    return out;
}

}  // namespace braidgen::oracle
