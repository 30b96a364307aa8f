#include "fliess/quasishuffle.hpp"

#include <map>
#include <shared_mutex>

namespace fliess {

namespace {

using Key = std::pair<Word, Word>;

struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
        if (a.first != b.first)
            return word_less(a.first, b.first);
        return word_less(a.second, b.second);
    }
};

// One memo table per weight; +1 and -1 dominate in practice.
struct QshCache {
    std::shared_mutex mu;
    std::map<Rat, std::map<Key, RatSeries, KeyLess>> tables;

    static QshCache& instance() {
        static QshCache c;
        return c;
    }
};

RatSeries compute(const Word& a, const Word& b, const Rat& theta);

RatSeries lookup(const Word& a, const Word& b, const Rat& theta) {
    Key key = word_less(b, a) ? Key(b, a) : Key(a, b);
    auto& cache = QshCache::instance();
    {
        std::shared_lock lock(cache.mu);
        auto t = cache.tables.find(theta);
        if (t != cache.tables.end()) {
            auto it = t->second.find(key);
            if (it != t->second.end())
                return it->second;
        }
    }
    RatSeries value = compute(key.first, key.second, theta);
    {
        std::unique_lock lock(cache.mu);
        cache.tables[theta].emplace(key, value);
    }
    return value;
}

RatSeries compute(const Word& a, const Word& b, const Rat& theta) {
    if (a.is_empty())
        return RatSeries::monomial(b);
    if (b.is_empty())
        return RatSeries::monomial(a);
    RatSeries out = detail::prepend_letter(a.front(), lookup(a.tail(), b, theta));
    out.add_scaled(detail::prepend_letter(b.front(), lookup(a, b.tail(), theta)), Rat(1));
    if (theta != 0) {
        Letter merged = bracket(a.front(), b.front());
        out.add_scaled(detail::prepend_letter(merged, lookup(a.tail(), b.tail(), theta)), theta);
    }
    return out;
}

} // namespace

RatSeries qsh_words(const Word& a, const Word& b, const Rat& theta) { return lookup(a, b, theta); }

RatSeries qsh_series(const RatSeries& c, const RatSeries& d, const Rat& theta, int degree) {
    if (c.ell() != d.ell())
        throw dimension_mismatch("dimension mismatch in quasi-shuffle product");
    Truncation t = min(Truncation::at(degree), min(c.truncation(), d.truncation()));
    bool skipped = false;
    RatSeries out(c.ell(), t);
    for (const auto& [u, a] : c.terms()) {
        // |u qsh v| >= max(|u|, |v|): longer operand words cannot reach back.
        if (!t.allows(u.length())) {
            skipped = true;
            continue;
        }
        for (const auto& [v, b] : d.terms()) {
            if (!t.allows(v.length())) {
                skipped = true;
                continue;
            }
            std::vector<Rat> coeff(a.size());
            for (size_t i = 0; i < a.size(); ++i)
                coeff[i] = a[i] * b[i];
            for (const auto& [w, q] : qsh_words(u, v, theta).terms()) {
                if (!t.allows(w.length())) {
                    skipped = true;
                    continue;
                }
                std::vector<Rat> scaled = coeff;
                for (auto& x : scaled)
                    x *= q[0];
                out.add_term(w, std::move(scaled));
            }
        }
    }
    if (!skipped && c.truncation().is_exact() && d.truncation().is_exact())
        out.set_truncation(Truncation::exact());
    return out;
}

std::vector<std::pair<Word, Word>> deconcat_coproduct(const Word& w) {
    std::vector<std::pair<Word, Word>> out;
    out.reserve(w.length() + 1);
    for (size_t k = 0; k <= w.length(); ++k)
        out.emplace_back(w.prefix(k), w.suffix_from(k));
    return out;
}

RatSeries qsh_antipode(const Word& w, const Rat& theta) {
    const size_t n = w.length();
    // Bottom-up over prefixes; each antipode reuses the shorter ones.
    std::vector<RatSeries> s;
    s.reserve(n + 1);
    s.push_back(RatSeries::one(1));
    for (size_t len = 1; len <= n; ++len) {
        RatSeries cur = neg(RatSeries::monomial(w.prefix(len)));
        for (size_t l = 1; l < len; ++l) {
            RatSeries tail = RatSeries::monomial(w.prefix(len).suffix_from(l));
            cur.add_scaled(qsh_series(s[l], tail, theta, static_cast<int>(len)), Rat(-1));
        }
        s.push_back(std::move(cur));
    }
    return s.back();
}

RatSeries qsh_power_closed_form(int i, int j, const Rat& theta) {
    if (i < 0 || j < 0)
        throw std::invalid_argument("negative powers");
    const Letter x1 = Letter::base(1);
    const Letter x11 = bracket(x1, x1);
    const int lo = std::min(i, j);
    RatSeries out(1);
    for (int k = 0; k <= lo; ++k) {
        Word brackets = Word::power(x11, k);
        Word singles = Word::power(x1, i + j - 2 * k);
        Rat factor = rat_pow(theta, static_cast<unsigned long>(k)) *
                     binomial(static_cast<unsigned long>(i + j - 2 * k),
                              static_cast<unsigned long>(lo - k));
        out.add_scaled(shuffle_words(brackets, singles), factor);
    }
    return out;
}

} // namespace fliess
