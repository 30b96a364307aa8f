#pragma once

#include "fliess/alphabet.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fliess {

// Immutable word over the (possibly bracket-extended) alphabet. Catenation
// is associative with the empty word as unit.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    static Word empty() { return Word(); }
    static Word single(Letter x) { return Word({x}); }
    // k-fold repetition of one letter.
    static Word power(Letter x, int k);

    size_t length() const { return letters_.size(); }
    bool is_empty() const { return letters_.empty(); }
    Letter at(size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    Letter front() const { return letters_.front(); }
    Word tail() const; // drop first letter
    Word prepend(Letter x) const;
    Word append(Letter x) const;
    Word cat(const Word& rhs) const;
    Word prefix(size_t n) const;
    Word suffix_from(size_t n) const; // letters n..end

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

private:
    std::vector<Letter> letters_;
};

// Canonical order: shorter words first, then letterwise by letter content.
bool word_less(const Word& a, const Word& b);

struct WordLess {
    bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

inline size_t word_length(const Word& w) { return w.length(); }

// Occurrences of the letter x in w.
int letter_count(const Word& w, Letter x);

// ||w|| = 2|w|_0 + |w|_{j!=0} on the base alphabet. Throws degree_undefined
// if w contains a bracket letter.
int feedback_degree(const Word& w);

// x^{-1}(w): the tail of w when w starts with x, otherwise nothing (the zero
// of the linear extension).
std::optional<Word> left_shift(Letter x, const Word& w);
// (x_i xi)^{-1}(.) = xi^{-1} x_i^{-1}(.)
std::optional<Word> left_shift(const Word& prefix, const Word& w);

std::string to_string(const Word& w); // "x0 x1", empty word prints as "e"
Word parse_word(const std::string& text);

// All words over the given letters with length <= maxlen, in canonical order.
std::vector<Word> all_words(const std::vector<Letter>& letters, int maxlen);

} // namespace fliess
