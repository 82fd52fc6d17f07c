#include "braidgen/automaton.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace braidgen {

LexAutomaton build_automaton(StrandCount n, int ceiling) {
    if (n.n > ceiling)
        throw Error("automaton state count is exponential in the strand count; n=" +
                    std::to_string(n.n) + " exceeds the ceiling of " + std::to_string(ceiling));
    LexAutomaton a{n, {}, {}, 0};
    std::unordered_map<AdmissibleFunction, int, AdmissibleFunctionHash> ids;
    const int letters = n.n - 1;
    std::deque<int> queue;

    auto intern = [&](const AdmissibleFunction& f) {
        auto [it, inserted] = ids.emplace(f, static_cast<int>(a.states.size()));
        if (inserted) {
            a.states.push_back(f);
            a.delta.resize(a.states.size() * letters, -1);
            queue.push_back(it->second);
        }
        return it->second;
    };

    intern(AdmissibleFunction::initial(n));
    while (!queue.empty()) {
        const int id = queue.front();
        queue.pop_front();
        for (int l = 1; l <= letters; ++l) {
            auto g = step_f(a.states[id], l);
            const int target = g ? intern(*g) : -1;
            a.delta[static_cast<std::size_t>(id) * letters + (l - 1)] = target;
        }
    }
    // Blocked transitions point at the fail state, placed after all accepted states.
    const int fail = static_cast<int>(a.states.size());
    for (auto& t : a.delta)
        if (t < 0) t = fail;
    return a;
}

bool accepts(const LexAutomaton& a, const ArtinWord& w) {
    if (w.strands() != a.n) throw Error("alphabet mismatch");
    int state = a.initial;
    for (Letter l : w.letters()) {
        state = a.next(state, l);
        if (state == a.fail()) return false;
    }
    return state != a.fail();
}

mpz_class path_count(const LexAutomaton& a, int k) {
    if (k < 0) throw Error("length must be non-negative");
    const int m = a.accepted_count();
    std::vector<mpz_class> v(m, 0), next(m);
    v[a.initial] = 1;
    for (int step = 0; step < k; ++step) {
        for (auto& c : next) c = 0;
        for (int s = 0; s < m; ++s) {
            if (v[s] == 0) continue;
            for (int l = 1; l <= a.n.n - 1; ++l) {
                const int t = a.next(s, l);
                if (t != a.fail()) next[t] += v[s];
            }
        }
        std::swap(v, next);
    }
    mpz_class total = 0;
    for (const auto& c : v) total += c;
    return total;
}

bool check_minimality(const LexAutomaton& a) {
    const int letters = a.n.n - 1;
    const int total = a.accepted_count() + 1;  // fail included
    std::vector<int> cls(total, 0);
    cls[a.fail()] = 1;
    int count = 2;
    for (;;) {
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> next_cls(total);
        for (int s = 0; s < total; ++s) {
            std::vector<int> sig;
            sig.reserve(letters + 1);
            sig.push_back(cls[s]);
            for (int l = 1; l <= letters; ++l) sig.push_back(cls[a.next(s, l)]);
            auto [it, inserted] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
            next_cls[s] = it->second;
        }
        const int next_count = static_cast<int>(sig_ids.size());
        cls = std::move(next_cls);
        if (next_count == count) break;
        count = next_count;
    }
    return count == total;
}

namespace {

std::string state_label(const AdmissibleFunction& f) {
    std::string out = "{";
    bool first = true;
    for (const ArtinWord& w : f_to_set(f)) {
        if (!first) out += "; ";
        first = false;
        out += format_word(w);
    }
    out += "}";
    return out;
}

}  // namespace

std::string export_automaton(const LexAutomaton& a, const std::string& format) {
    const int letters = a.n.n - 1;
    if (format == "dot") {
        std::ostringstream out;
        out << "digraph lex_acceptor {\n";
        out << "  rankdir=LR;\n";
        out << "  node [shape=box, style=rounded];\n";
        for (int s = 0; s < a.accepted_count(); ++s)
            out << "  " << s << " [label=\"" << state_label(a.states[s]) << "\"];\n";
        for (int s = 0; s < a.accepted_count(); ++s)
            for (int l = 1; l <= letters; ++l) {
                const int t = a.next(s, l);
                if (t == a.fail()) continue;  // fail state suppressed
                out << "  " << s << " -> " << t << " [label=\"" << l << "\"];\n";
            }
        out << "}\n";
        return out.str();
    }
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["n"] = a.n.n;
        doc["states"] = nlohmann::ordered_json::array();
        for (int s = 0; s < a.accepted_count(); ++s) {
            nlohmann::ordered_json st;
            st["id"] = s;
            st["f"] = a.states[s].values();
            std::vector<std::string> fb;
            for (const ArtinWord& w : f_to_set(a.states[s])) fb.push_back(format_word(w));
            st["forbidden"] = fb;
            doc["states"].push_back(std::move(st));
        }
        doc["transitions"] = nlohmann::ordered_json::array();
        for (int s = 0; s < a.accepted_count(); ++s)
            for (int l = 1; l <= letters; ++l)
                doc["transitions"].push_back({s, l, a.next(s, l)});
        doc["initial"] = a.initial;
        doc["fail"] = a.fail();
        return doc.dump(2) + "\n";
    }
    throw Error("unsupported export format: " + format);
}

bool witness_distinctness(StrandCount n, int bound) {
    if (n.n > bound) throw Error("witness bound exceeded");
    const int free_indices = n.n - 2;  // subsets of {1..n-2}
    std::set<std::vector<std::int16_t>> seen;
    for (std::uint64_t mask = 0; mask < (1ull << free_indices); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < free_indices; ++i)
            if (mask & (1ull << i)) subset.push_back(i + 1);
        const ArtinWord w = build_witness(n, subset);
        auto f = f_for_word(w);
        if (!f) return false;  // witness words must be lex-representatives
        seen.insert(f->values());
    }
    return seen.size() == (1ull << free_indices);
}

}  // namespace braidgen
