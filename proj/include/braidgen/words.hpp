#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidgen {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Number of strands n >= 2.  Generator indices run over 1..n-1.
struct StrandCount {
    int n;
    explicit StrandCount(int strands) : n(strands) {
        if (strands < 2) throw Error("strand count must be at least 2");
    }
    int generators() const { return n - 1; }
    friend bool operator==(StrandCount a, StrandCount b) { return a.n == b.n; }
    friend bool operator!=(StrandCount a, StrandCount b) { return a.n != b.n; }
};

// 1-based generator index; 16 bits so that words over several hundred strands fit.
using Letter = std::uint16_t;

/// A word in the Artin generators sigma_1..sigma_{n-1} of the positive braid
/// monoid.  Immutable after construction; the empty word is valid.
class ArtinWord {
  public:
    ArtinWord(StrandCount n, std::vector<Letter> letters);
    static ArtinWord empty(StrandCount n) { return ArtinWord(n, {}); }

    StrandCount strands() const { return n_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool is_empty() const { return letters_.empty(); }
    Letter letter(std::size_t pos) const { return letters_[pos]; }
    Letter last() const { return letters_.back(); }

    ArtinWord appended(Letter l) const;
    ArtinWord prefix(std::size_t len) const;

    friend bool operator==(const ArtinWord& a, const ArtinWord& b) {
        return a.n_ == b.n_ && a.letters_ == b.letters_;
    }
    friend bool operator!=(const ArtinWord& a, const ArtinWord& b) { return !(a == b); }

  private:
    StrandCount n_;
    std::vector<Letter> letters_;
};

enum class Ordering { less, equal, greater };

/// Lexicographic comparison with sigma_1 < sigma_2 < ... < sigma_{n-1};
/// a proper prefix compares less than its extensions.
Ordering lex_compare(const ArtinWord& u, const ArtinWord& v);

/// Parses whitespace-separated 1-based generator indices ("3 2 1"); the empty
/// string is the empty word.
ArtinWord parse_word(std::string_view text, StrandCount n);

/// Space-separated 1-based indices; the empty word formats as "".
std::string format_word(const ArtinWord& w);

}  // namespace braidgen
