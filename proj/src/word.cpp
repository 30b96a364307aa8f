#include "fliess/word.hpp"

#include "fliess/errors.hpp"

#include <algorithm>
#include <sstream>

namespace fliess {

Word Word::power(Letter x, int k) {
    if (k < 0)
        throw std::invalid_argument("negative word power");
    return Word(std::vector<Letter>(static_cast<size_t>(k), x));
}

Word Word::tail() const {
    if (is_empty())
        throw std::out_of_range("tail of empty word");
    return Word(std::vector<Letter>(letters_.begin() + 1, letters_.end()));
}

Word Word::prepend(Letter x) const {
    std::vector<Letter> out;
    out.reserve(letters_.size() + 1);
    out.push_back(x);
    out.insert(out.end(), letters_.begin(), letters_.end());
    return Word(std::move(out));
}

Word Word::append(Letter x) const {
    std::vector<Letter> out = letters_;
    out.push_back(x);
    return Word(std::move(out));
}

Word Word::cat(const Word& rhs) const {
    std::vector<Letter> out = letters_;
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(std::move(out));
}

Word Word::prefix(size_t n) const {
    return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + std::min(n, letters_.size())));
}

Word Word::suffix_from(size_t n) const {
    if (n >= letters_.size())
        return Word();
    return Word(std::vector<Letter>(letters_.begin() + n, letters_.end()));
}

bool word_less(const Word& a, const Word& b) {
    if (a.length() != b.length())
        return a.length() < b.length();
    for (size_t i = 0; i < a.length(); ++i) {
        if (a.at(i) != b.at(i))
            return letter_less(a.at(i), b.at(i));
    }
    return false;
}

int letter_count(const Word& w, Letter x) {
    int n = 0;
    for (Letter y : w.letters())
        if (y == x)
            ++n;
    return n;
}

int feedback_degree(const Word& w) {
    int deg = 0;
    for (Letter x : w.letters()) {
        if (!x.is_base())
            throw degree_undefined("||.|| is defined only on the base alphabet");
        deg += x.base_index() == 0 ? 2 : 1;
    }
    return deg;
}

std::optional<Word> left_shift(Letter x, const Word& w) {
    if (w.is_empty() || w.front() != x)
        return std::nullopt;
    return w.tail();
}

std::optional<Word> left_shift(const Word& prefix, const Word& w) {
    std::optional<Word> cur = w;
    for (Letter x : prefix.letters()) {
        cur = left_shift(x, *cur);
        if (!cur)
            return std::nullopt;
    }
    return cur;
}

std::string to_string(const Word& w) {
    if (w.is_empty())
        return "e";
    std::string s;
    for (size_t i = 0; i < w.length(); ++i) {
        if (i)
            s += ' ';
        s += to_string(w.at(i));
    }
    return s;
}

Word parse_word(const std::string& text) {
    std::istringstream in(text);
    std::vector<Letter> letters;
    std::string tok;
    while (in >> tok) {
        if (tok == "e") {
            if (!letters.empty() || (in >> tok))
                throw parse_error("'e' must stand alone in a word");
            return Word();
        }
        letters.push_back(parse_letter(tok));
    }
    return Word(std::move(letters));
}

std::vector<Word> all_words(const std::vector<Letter>& letters, int maxlen) {
    std::vector<Letter> sorted = letters;
    std::sort(sorted.begin(), sorted.end(), letter_less);
    std::vector<Word> out;
    std::vector<Word> level{Word()};
    out.push_back(Word());
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<Word> next;
        next.reserve(level.size() * sorted.size());
        for (const Word& w : level)
            for (Letter x : sorted)
                next.push_back(w.append(x));
        std::sort(next.begin(), next.end(), word_less);
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

} // namespace fliess
