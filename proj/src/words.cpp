#include "braidgen/words.hpp"

#include <charconv>
#include <sstream>

namespace braidgen {

ArtinWord::ArtinWord(StrandCount n, std::vector<Letter> letters)
    : n_(n), letters_(std::move(letters)) {
    for (Letter l : letters_) {
        if (l < 1 || l > n_.n - 1) throw Error("generator out of range");
    }
}

ArtinWord ArtinWord::appended(Letter l) const {
    std::vector<Letter> ls = letters_;
    ls.push_back(l);
    return ArtinWord(n_, std::move(ls));
}

ArtinWord ArtinWord::prefix(std::size_t len) const {
    return ArtinWord(n_, std::vector<Letter>(letters_.begin(), letters_.begin() + len));
}

Ordering lex_compare(const ArtinWord& u, const ArtinWord& v) {
    if (u.strands() != v.strands()) throw Error("alphabet mismatch");
    const auto& a = u.letters();
    const auto& b = v.letters();
    std::size_t m = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] < b[i]) return Ordering::less;
        if (a[i] > b[i]) return Ordering::greater;
    }
    if (a.size() < b.size()) return Ordering::less;
    if (a.size() > b.size()) return Ordering::greater;
    return Ordering::equal;
}

ArtinWord parse_word(std::string_view text, StrandCount n) {
    std::vector<Letter> letters;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw Error("parse error: invalid token '" + tok + "'");
        if (value < 1 || value > n.n - 1) throw Error("generator out of range");
        letters.push_back(static_cast<Letter>(value));
    }
    return ArtinWord(n, std::move(letters));
}

std::string format_word(const ArtinWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w.letter(i));
    }
    return out;
}

}  // namespace braidgen
