#include "braidgen/counting.hpp"

#include <algorithm>
#include <cassert>

#include "braidgen/perm_braid.hpp"

namespace braidgen {

namespace {

using int128 = __int128;

mpz_class to_mpz(const mpz_class& v) { return v; }

mpz_class to_mpz(int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class r = static_cast<unsigned long>(u >> 64);
    r <<= 64;
    r += static_cast<unsigned long>(u);
    return neg ? mpz_class(-r) : r;
}

// One of the two swap buffers of the scan.  Content is tracked by the
// occupancy lists so that clearing touches only cells that may be non-zero;
// the layout under which they were written is remembered for that purpose.
template <class E>
struct CubeBuf {
    std::vector<E> cells;
    int layout_n = 0;
    int occupied_lhi = -1;
    std::vector<int> occ_r, occ_s;

    E& at(int l, int r, int s) {
        return cells[(static_cast<std::size_t>(l) * layout_n + r) * layout_n + s];
    }
    const E& at(int l, int r, int s) const {
        return cells[(static_cast<std::size_t>(l) * layout_n + r) * layout_n + s];
    }

    void wipe() {
        if (occupied_lhi >= 0) {
            for (int r : occ_r)
                for (int s : occ_s)
                    for (int l = 0; l <= occupied_lhi; ++l) at(l, r, s) = 0;
        }
        occ_r.clear();
        occ_s.clear();
        occupied_lhi = -1;
    }

    void prepare(int n, int l_max) {
        const std::size_t need = static_cast<std::size_t>(l_max + 1) * n * n;
        if (cells.size() < need) {
            cells.assign(need, E(0));
            occ_r.clear();
            occ_s.clear();
            occupied_lhi = -1;
        } else {
            wipe();
        }
        layout_n = n;
    }
};

std::vector<int> marks_to_list(const std::vector<char>& marks) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(marks.size()); ++i)
        if (marks[i]) out.push_back(i);
    return out;
}

template <class E>
class ScanT {
  public:
    ScanT(StrandCount n, const std::vector<std::int16_t>& feet, int start, int l_max,
          bool sparse, CubeBuf<E>& buf_a, CubeBuf<E>& buf_b)
        : n_(n.n), feet_(feet), a_(start), b_(start), alpha_(0), l_max_(l_max),
          sparse_(sparse), cur_(&buf_a), nxt_(&buf_b) {
        cur_->prepare(n_, l_max_);
        nxt_->prepare(n_, l_max_);
        cur_->at(0, 0, 0) = 1;
        cur_->occ_r = {0};
        cur_->occ_s = {0};
        cur_->occupied_lhi = 0;
    }

    bool done() const { return a_ == 1 && b_ == n_; }
    int a() const { return a_; }
    int b() const { return b_; }
    int alpha() const { return alpha_; }
    int l_max() const { return l_max_; }

    const E& entry(int l, int r, int s) const {
        static const E zero{0};
        if (l < 0 || l > l_max_ || r < 0 || r >= n_ || s < 0 || s >= n_) return zero;
        return cur_->at(l, r, s);
    }

    E layer_total(int l) const {
        E acc{0};
        if (l < 0 || l > l_max_) return acc;
        for (int r : cur_->occ_r)
            for (int s : cur_->occ_s) acc += cur_->at(l, r, s);
        return acc;
    }

    void advance() {
        if (done()) throw Error("scan already complete");
        const bool left = (b_ == n_) || (feet_[b_] != 0 && feet_[b_] < a_);
        ++alpha_;
        const int width = b_ - a_;
        if (left) {
            if (width < 1) throw Error("malformed forbidden set");
            const int na = a_ - 1;
            for (int h = a_; h <= b_ - 1; ++h)
                if (feet_[h] == na) throw Error("malformed forbidden set");
            const bool atom = feet_[na] == na;
            if (sparse_)
                left_sparse(atom, width);
            else
                plain_step(true, atom ? Kind::atom : Kind::none, width);
            a_ = na;
        } else {
            const int foot = feet_[b_];
            Kind kind = Kind::none;
            if (foot == b_)
                kind = Kind::atom;
            else if (foot != 0) {
                if (foot != a_) throw Error("malformed forbidden set");
                kind = Kind::run;
            }
            if (sparse_)
                right_sparse(kind, width);
            else
                plain_step(false, kind, width);
            ++b_;
        }
        std::swap(cur_, nxt_);
    }

  private:
    enum class Kind { none, atom, run };

    // Extending the window to the left collapses the displacement of the old
    // boundary strand a to zero; a newly covered atom additionally joins every
    // tracked element, landing at indices given by its strand displacements.
    void left_sparse(bool atom, int width) {
        nxt_->prepare(n_, l_max_);
        std::vector<char> mr(n_, 0), ms(n_, 0);
        int lhi = -1;
        for (int s : cur_->occ_s)
            for (int l = 0; l <= cur_->occupied_lhi; ++l) {
                E acc{0};
                for (int r : cur_->occ_r) acc += cur_->at(l, r, s);
                if (acc != 0) {
                    nxt_->at(l, 0, s) = acc;
                    mr[0] = 1;
                    ms[s] = 1;
                    lhi = std::max(lhi, l);
                }
            }
        if (atom) {
            for (int r0 : cur_->occ_r)
                for (int s0 : cur_->occ_s)
                    for (int l0 = 0; l0 <= cur_->occupied_lhi; ++l0) {
                        const E& v = cur_->at(l0, r0, s0);
                        if (v == 0) continue;
                        const int l = l0 + r0 + 1;
                        if (l > l_max_) continue;
                        const int r = r0 + 1;
                        const int s = (r0 + s0 < width) ? s0 : s0 + 1;
                        nxt_->at(l, r, s) = -v;
                        mr[r] = 1;
                        ms[s] = 1;
                        lhi = std::max(lhi, l);
                    }
        }
        nxt_->occ_r = marks_to_list(mr);
        nxt_->occ_s = marks_to_list(ms);
        nxt_->occupied_lhi = lhi;
    }

    void right_sparse(Kind kind, int width) {
        nxt_->prepare(n_, l_max_);
        std::vector<char> mr(n_, 0), ms(n_, 0);
        int lhi = -1;
        for (int r : cur_->occ_r)
            for (int l = 0; l <= cur_->occupied_lhi; ++l) {
                E acc{0};
                for (int s : cur_->occ_s) acc += cur_->at(l, r, s);
                if (acc != 0) {
                    nxt_->at(l, r, 0) = acc;
                    mr[r] = 1;
                    ms[0] = 1;
                    lhi = std::max(lhi, l);
                }
            }
        if (kind == Kind::atom) {
            for (int r0 : cur_->occ_r)
                for (int s0 : cur_->occ_s)
                    for (int l0 = 0; l0 <= cur_->occupied_lhi; ++l0) {
                        const E& v = cur_->at(l0, r0, s0);
                        if (v == 0) continue;
                        const int l = l0 + s0 + 1;
                        if (l > l_max_) continue;
                        const int s = s0 + 1;
                        const int r = (r0 + s0 < width) ? r0 : r0 + 1;
                        nxt_->at(l, r, s) = -v;
                        mr[r] = 1;
                        ms[s] = 1;
                        lhi = std::max(lhi, l);
                    }
        } else if (kind == Kind::run) {
            // The full run sigma_b..sigma_a sends the new boundary strand b+1
            // all the way down to a, independent of the joined element.
            for (int r0 : cur_->occ_r)
                for (int s0 : cur_->occ_s)
                    for (int l0 = 0; l0 <= cur_->occupied_lhi; ++l0) {
                        const E& v = cur_->at(l0, r0, s0);
                        if (v == 0) continue;
                        const int l = l0 + alpha_;
                        if (l > l_max_) continue;
                        const int r = r0 + 1;
                        nxt_->at(l, r, alpha_) -= v;
                        mr[r] = 1;
                        ms[alpha_] = 1;
                        lhi = std::max(lhi, l);
                    }
        }
        nxt_->occ_r = marks_to_list(mr);
        nxt_->occ_s = marks_to_list(ms);
        nxt_->occupied_lhi = lhi;
    }

    // Verbatim full-array update; the slow reference for differential tests.
    void plain_step(bool left, Kind kind, int width) {
        nxt_->prepare(n_, l_max_);
        auto src = [&](int l, int r, int s) -> E {
            if (l < 0 || l > l_max_ || r < 0 || r >= n_ || s < 0 || s >= n_) return E{0};
            return cur_->at(l, r, s);
        };
        for (int l = 0; l <= l_max_; ++l)
            for (int r = 0; r < n_; ++r)
                for (int s = 0; s < n_; ++s) {
                    E v{0};
                    if (left) {
                        if (r == 0) {
                            for (int u = 0; u <= width; ++u) v += src(l, u, s);
                        } else if (kind == Kind::atom && r <= l && r + s < alpha_) {
                            v = -src(l - r, r - 1, s);
                        } else if (kind == Kind::atom && r <= l && r + s > alpha_) {
                            v = -src(l - r, r - 1, s - 1);
                        }
                    } else if (kind == Kind::run) {
                        if (s == 0) {
                            for (int u = 0; u <= width; ++u) v += src(l, r, u);
                        } else if (s == alpha_ && l >= alpha_ && r >= 1) {
                            for (int u = 0; u <= width; ++u) v -= src(l - alpha_, r - 1, u);
                        }
                    } else {
                        if (s == 0) {
                            for (int u = 0; u <= width; ++u) v += src(l, r, u);
                        } else if (kind == Kind::atom && s <= l && r + s < alpha_) {
                            v = -src(l - s, r, s - 1);
                        } else if (kind == Kind::atom && s <= l && r + s > alpha_) {
                            v = -src(l - s, r - 1, s - 1);
                        }
                    }
                    if (v != 0) nxt_->at(l, r, s) = v;
                }
        std::vector<int> all(n_);
        for (int i = 0; i < n_; ++i) all[i] = i;
        nxt_->occ_r = all;
        nxt_->occ_s = all;
        nxt_->occupied_lhi = l_max_;
    }

    int n_;
    std::vector<std::int16_t> feet_;  // index 1..n-1; 0 = no element headed there
    int a_, b_, alpha_, l_max_;
    bool sparse_;
    CubeBuf<E>* cur_;
    CubeBuf<E>* nxt_;
};

struct CountArgs {
    int n = 0;
    int t = 0;
    int j0 = 1;
    std::vector<std::int16_t> feet;
};

// Shared validation; returns nullopt when the count is trivially zero.
std::optional<CountArgs> prepare_count(int k, const ArtinWord& w, int m, const GrowthTables& g,
                                       const AdmissibleFunction* fw) {
    const int n = w.strands().n;
    if (g.n != n) throw Error("growth tables built for a different strand count");
    if (k < 0) throw Error("length must be non-negative");
    if (g.k_max < k) throw Error("growth tables do not cover the requested length");
    const int j = w.is_empty() ? 0 : w.last();
    if (m < 1 || m > n - 1 || (j > 0 && m < j - 1)) throw Error("m out of supported range");
    if (static_cast<int>(w.size()) > k) return std::nullopt;
    CountArgs args;
    args.n = n;
    args.t = static_cast<int>(w.size());
    args.j0 = w.is_empty() ? 1 : j;
    if (fw) {
        if (fw->strands() != w.strands()) throw Error("alphabet mismatch");
        args.feet = restrict_m_function(*fw, j, m);
    } else {
        auto f = f_for_word(w);
        if (!f) return std::nullopt;
        args.feet = restrict_m_function(*f, j, m);
    }
    // 1-based feet array with a slot for every index 0..n-1
    args.feet.insert(args.feet.begin(), 0);
    return args;
}

template <class E>
mpz_class run_scan(const CountArgs& args, int k, const GrowthTables& g, CubeBuf<E>& buf_a,
                   CubeBuf<E>& buf_b, bool sparse) {
    const long long cap = static_cast<long long>(args.n) * (args.n - 1) / 2;
    const int l_max = static_cast<int>(std::min<long long>(k - args.t, cap));
    ScanT<E> scan(StrandCount(args.n), args.feet, args.j0, l_max, sparse, buf_a, buf_b);
    while (!scan.done()) scan.advance();
    mpz_class acc = 0;
    for (int l = 0; l <= l_max; ++l) {
        E total = scan.layer_total(l);
        if (total != 0) acc += to_mpz(total) * g.x[k - args.t - l];
    }
    return acc;
}

}  // namespace

struct CountWorkspace::Impl {
    CubeBuf<int128> fast_a, fast_b;
    CubeBuf<mpz_class> wide_a, wide_b;
};

CountWorkspace::CountWorkspace() : impl(std::make_unique<Impl>()) {}
CountWorkspace::~CountWorkspace() = default;
CountWorkspace::CountWorkspace(CountWorkspace&&) noexcept = default;
CountWorkspace& CountWorkspace::operator=(CountWorkspace&&) noexcept = default;

mpz_class count_with_prefix(int k, const ArtinWord& w, int m, const GrowthTables& g,
                            const AdmissibleFunction* fw, CountWorkspace* ws, bool sparse) {
    auto args = prepare_count(k, w, m, g, fw);
    if (!args) return 0;
    // Entries are bounded by 2^n in absolute value, so 127-bit arithmetic
    // covers every n up to 126; beyond that fall back to big integers.
    if (args->n <= 126) {
        if (ws) return run_scan(*args, k, g, ws->impl->fast_a, ws->impl->fast_b, sparse);
        CubeBuf<int128> buf_a, buf_b;
        return run_scan(*args, k, g, buf_a, buf_b, sparse);
    }
    if (ws) return run_scan(*args, k, g, ws->impl->wide_a, ws->impl->wide_b, sparse);
    CubeBuf<mpz_class> buf_a, buf_b;
    return run_scan(*args, k, g, buf_a, buf_b, sparse);
}

mpz_class reference_count(int k, const ArtinWord& w, int m, const GrowthTables& g,
                          int subset_bound) {
    auto args = prepare_count(k, w, m, g, nullptr);
    if (!args) return 0;
    auto f = f_for_word(w);  // known to exist
    ForbiddenSet forbidden = restrict_m(*f, w.is_empty() ? 0 : w.last(), m);
    if (static_cast<int>(forbidden.size()) > subset_bound)
        throw Error("too many forbidden prefixes for reference path");
    std::vector<PermBraid> elements;
    elements.reserve(forbidden.size());
    for (const ArtinWord& e : forbidden) elements.push_back(PermBraid::from_word(e));
    const int count = static_cast<int>(elements.size());
    mpz_class acc = 0;
    for (std::uint64_t mask = 0; mask < (1ull << count); ++mask) {
        PermBraid join = PermBraid::identity(w.strands());
        for (int i = 0; i < count; ++i)
            if (mask & (1ull << i)) join = lcm(join, elements[i]);
        const int idx = k - args->t - join.length();
        if (idx < 0) continue;
        if (__builtin_popcountll(mask) % 2 == 0)
            acc += g.x[idx];
        else
            acc -= g.x[idx];
    }
    return acc;
}

struct WindowScan::Impl {
    CubeBuf<mpz_class> buf_a, buf_b;
    std::vector<std::int16_t> feet;
    StrandCount n;
    std::unique_ptr<ScanT<mpz_class>> scan;

    Impl(StrandCount nn) : n(nn) {}
};

WindowScan::WindowScan(const AdmissibleFunction& f, int last_letter, int m, int l_cap,
                       bool sparse)
    : impl(std::make_unique<Impl>(f.strands())) {
    if (l_cap < 0) throw Error("length cap must be non-negative");
    impl->feet = restrict_m_function(f, last_letter, m);
    impl->feet.insert(impl->feet.begin(), 0);
    const long long cap = static_cast<long long>(impl->n.n) * (impl->n.n - 1) / 2;
    const int l_max = static_cast<int>(std::min<long long>(l_cap, cap));
    const int start = last_letter == 0 ? 1 : last_letter;
    impl->scan = std::make_unique<ScanT<mpz_class>>(impl->n, impl->feet, start, l_max, sparse,
                                                    impl->buf_a, impl->buf_b);
}

WindowScan::~WindowScan() = default;
WindowScan::WindowScan(WindowScan&&) noexcept = default;

bool WindowScan::done() const { return impl->scan->done(); }
void WindowScan::advance() { impl->scan->advance(); }
int WindowScan::a() const { return impl->scan->a(); }
int WindowScan::b() const { return impl->scan->b(); }
int WindowScan::alpha() const { return impl->scan->alpha(); }
int WindowScan::l_max() const { return impl->scan->l_max(); }
mpz_class WindowScan::entry(int l, int r, int s) const { return impl->scan->entry(l, r, s); }
mpz_class WindowScan::layer_total(int l) const { return impl->scan->layer_total(l); }

std::vector<ArtinWord> WindowScan::window_elements() const {
    std::vector<ArtinWord> out;
    const int a = impl->scan->a(), b = impl->scan->b();
    for (int head = a; head <= b - 1; ++head) {
        const int foot = impl->feet[head];
        if (foot == 0 || foot < a) continue;
        std::vector<Letter> ls;
        for (int c = head; c >= foot; --c) ls.push_back(static_cast<Letter>(c));
        out.push_back(ArtinWord(impl->n, std::move(ls)));
    }
    return out;
}

}  // namespace braidgen
