#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace braidsig {

/// One occurrence of an Artin generator: index i in [1, strands-1],
/// sign +1 for a_i and -1 for its inverse.
struct Letter {
    int index;
    int sign;

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// A braid word on a fixed strand count: an ordered sequence of generator
/// letters. Words are immutable after construction; all operations return
/// fresh values.
class BraidWord {
public:
    /// Empty word on `strands` strands (the trivial braid, whose closure is
    /// the strands-component unlink).
    explicit BraidWord(int strands);

    BraidWord(int strands, std::vector<Letter> letters);

    /// Parses whitespace-separated tokens. Accepted forms: "a3" (positive
    /// generator), "A3" (inverse), or signed integers "3" / "-3".
    /// Throws std::invalid_argument on malformed tokens or indices outside
    /// [1, strands-1].
    static BraidWord parse(const std::string& text, int strands);

    int strands() const { return strands_; }
    const std::vector<Letter>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool is_empty() const { return letters_.empty(); }

    /// True iff every letter has sign +1.
    bool is_positive() const;

    /// Renders the word in the "a1 a2 A3" token format; parse() round-trips.
    std::string format() const;

    /// Concatenation uv. Throws on strand mismatch.
    BraidWord concat(const BraidWord& other) const;

    /// n-fold repetition, n >= 0; power(0) is the empty word.
    BraidWord power(int n) const;

    /// Rotates the letter sequence left by k, 0 <= k <= length. The closure
    /// is unchanged, so all closure invariants are preserved.
    BraidWord cyclic_shift(int k) const;

    /// Effect of rotating the diagram by 180 degrees: reverses the letter
    /// order and maps index i to strands-i. Signs are preserved. Involutive.
    BraidWord rotate180() const;

    /// Reversed letter order with all signs flipped; concat(w, w.inverse())
    /// is trivial in the braid group.
    BraidWord inverse() const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int strands_;
    std::vector<Letter> letters_;

    void check_letters() const;
};

}  // namespace braidsig
